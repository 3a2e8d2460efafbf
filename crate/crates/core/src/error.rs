use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message} (found `{token}`)")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub token: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("a braid needs at least one strand")]
    NoStrands,
    #[error("generator index 0 is not allowed")]
    ZeroGenerator,
    #[error("generator σ_{generator} does not exist on {strands} strands")]
    GeneratorOutOfRange { generator: usize, strands: usize },
    #[error("cannot combine braids on {left} and {right} strands")]
    StrandMismatch { left: usize, right: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("code has odd length {0}")]
    OddLength(usize),
    #[error("label {label} occurs {count} times, expected exactly twice")]
    WrongMultiplicity { label: i64, count: usize },
    #[error("labels must be exactly 1..={n}; found {label}")]
    LabelOutOfRange { label: i64, n: usize },
    #[error("chord labels must differ, got {0} twice")]
    SameChord(usize),
    #[error("no chord with label {label} in a code with {n} bands")]
    NoSuchChord { label: usize, n: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LinkError {
    #[error("linking number needs two distinct components, got {0} twice")]
    SameComponent(usize),
    #[error("component {component} does not exist (diagram has {count})")]
    MissingComponent { component: usize, count: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("band count {requested} exceeds the configured budget of {budget}")]
    BudgetExceeded { requested: usize, budget: usize },
}
