//! Exhaustive enumeration of flat basket codes.
//!
//! Codes are generated in normal form (labels first appear in increasing
//! order) and in lexicographic order, so every run produces the same stream.
//! Symmetry classes are taken under rotation and reversal of the cyclic word,
//! each followed by renormalization.

use rayon::prelude::*;
use serde::Serialize;

use crate::basket::{decode, trace_components, FlatBasketCode};
use crate::error::EnumerateError;
use crate::invariants::{fingerprint, Fingerprint};

pub use crate::basket::compare_codes;

pub const BUDGET_ENV: &str = "FLATBASKET_BUDGET";

/// Largest band counts the enumerator will accept.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Limit for `classify` and `search_min_code`.
    pub classify: usize,
    /// Limit for streaming enumeration.
    pub stream: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Self { classify: 6, stream: 8 }
    }
}

impl Budget {
    /// Defaults, with both limits replaced by `FLATBASKET_BUDGET` when it holds
    /// a number.
    pub fn from_env() -> Self {
        match std::env::var(BUDGET_ENV).ok().and_then(|v| v.trim().parse().ok()) {
            Some(limit) => Self { classify: limit, stream: limit },
            None => Self::default(),
        }
    }

    pub fn check_classify(&self, n: usize) -> Result<(), EnumerateError> {
        check(n, self.classify)
    }

    pub fn check_stream(&self, n: usize) -> Result<(), EnumerateError> {
        check(n, self.stream)
    }
}

fn check(requested: usize, budget: usize) -> Result<(), EnumerateError> {
    if requested > budget {
        Err(EnumerateError::BudgetExceeded { requested, budget })
    } else {
        Ok(())
    }
}

/// The least code of a symmetry class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct CanonicalCode(FlatBasketCode);

impl CanonicalCode {
    pub fn code(&self) -> &FlatBasketCode {
        &self.0
    }

    pub fn into_code(self) -> FlatBasketCode {
        self.0
    }
}

/// Every rotation and reversal of `code`, renormalized.
pub fn dihedral_orbit(code: &FlatBasketCode) -> Vec<FlatBasketCode> {
    let len = code.len().max(1);
    let reversed = code.reversed();
    (0..len)
        .flat_map(|r| [code.rotated(r).normalized(), reversed.rotated(r).normalized()])
        .collect()
}

pub fn canonicalize(code: &FlatBasketCode) -> CanonicalCode {
    let best = dihedral_orbit(code).into_iter().min_by(compare_codes).expect("orbit is never empty");
    CanonicalCode(best)
}

pub fn is_canonical(code: &FlatBasketCode) -> bool {
    let word = code.word();
    code.is_normalized() && dihedral_orbit(code).iter().all(|c| c.word() >= word)
}

/// Which words an enumeration visits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CodeSpace {
    /// Normal-form words only: one per relabeling class.
    #[default]
    Normalized,
    /// Every strict code over `1..=n`. Labels fix the band stacking, so these
    /// are all distinct baskets.
    Labelled,
}

impl CodeSpace {
    pub fn size(&self, n: usize) -> u128 {
        match self {
            CodeSpace::Normalized => code_count(n),
            CodeSpace::Labelled => code_count(n) * (1..=n as u128).product::<u128>(),
        }
    }
}

/// Lexicographic generator of codes on `n` bands, optionally restricted to
/// those that start with a fixed prefix.
#[derive(Clone, Debug)]
pub struct CodeIter {
    space: CodeSpace,
    n: usize,
    word: Vec<usize>,
    count: Vec<u8>,
    opened: usize,
    floor: usize,
    state: IterState,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum IterState {
    Fresh,
    Running,
    Done,
}

impl CodeIter {
    /// Normal-form codes.
    pub fn new(n: usize) -> Self {
        Self::in_space(CodeSpace::Normalized, n)
    }

    pub fn in_space(space: CodeSpace, n: usize) -> Self {
        Self::with_prefix(space, n, &[]).expect("empty prefix is always valid")
    }

    /// Codes whose word begins with `prefix`; `None` if no code does.
    pub fn with_prefix(space: CodeSpace, n: usize, prefix: &[usize]) -> Option<Self> {
        let mut it = Self {
            space,
            n,
            word: Vec::with_capacity(2 * n),
            count: vec![0; n + 2],
            opened: 0,
            floor: prefix.len(),
            state: IterState::Fresh,
        };
        for &v in prefix {
            if prefix.len() > 2 * n || !it.allowed(v) {
                return None;
            }
            it.push(v);
        }
        Some(it)
    }

    fn allowed(&self, v: usize) -> bool {
        match self.space {
            CodeSpace::Normalized => {
                (1..=self.opened).contains(&v) && self.count[v] == 1 || v == self.opened + 1 && self.opened < self.n
            }
            CodeSpace::Labelled => (1..=self.n).contains(&v) && self.count[v] < 2,
        }
    }

    fn push(&mut self, v: usize) {
        self.word.push(v);
        self.count[v] += 1;
        if self.count[v] == 1 {
            self.opened += 1;
        }
    }

    fn pop(&mut self) -> usize {
        let v = self.word.pop().expect("pop below an empty word");
        self.count[v] -= 1;
        if self.count[v] == 0 {
            self.opened -= 1;
        }
        v
    }

    fn next_choice(&self, after: usize) -> Option<usize> {
        match self.space {
            CodeSpace::Normalized => ((after + 1)..=self.opened)
                .find(|&v| self.count[v] == 1)
                .or_else(|| (self.opened < self.n && self.opened + 1 > after).then_some(self.opened + 1)),
            CodeSpace::Labelled => ((after + 1)..=self.n).find(|&v| self.count[v] < 2),
        }
    }

    fn fill(&mut self) {
        while self.word.len() < 2 * self.n {
            let v = self.next_choice(0).expect("a partial code always extends");
            self.push(v);
        }
    }

    fn advance(&mut self) -> bool {
        while self.word.len() > self.floor {
            let v = self.pop();
            if let Some(c) = self.next_choice(v) {
                self.push(c);
                self.fill();
                return true;
            }
        }
        false
    }
}

impl Iterator for CodeIter {
    type Item = FlatBasketCode;

    fn next(&mut self) -> Option<FlatBasketCode> {
        match self.state {
            IterState::Done => return None,
            IterState::Fresh => {
                self.state = IterState::Running;
                self.fill();
            }
            IterState::Running => {
                if !self.advance() {
                    self.state = IterState::Done;
                    return None;
                }
            }
        }
        Some(FlatBasketCode::from_word_unchecked(self.word.clone()))
    }
}

/// Number of normal-form codes on `n` bands, `(2n)! / (2^n n!) = (2n - 1)!!`.
pub fn code_count(n: usize) -> u128 {
    (1..=n as u128).map(|k| 2 * k - 1).product()
}

/// Streams normal-form codes on `n` bands in lexicographic order.
pub fn enumerate_codes(n: usize, canonical_only: bool) -> impl Iterator<Item = FlatBasketCode> {
    CodeIter::new(n).filter(move |c| !canonical_only || is_canonical(c))
}

/// Valid code prefixes of length `len` in lexicographic order.
fn prefixes(space: CodeSpace, n: usize, len: usize) -> Vec<Vec<usize>> {
    let len = len.min(2 * n);
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|p| {
                let it = CodeIter::with_prefix(space, n, &p).expect("extended only by allowed labels");
                let mut choices = Vec::new();
                let mut after = 0;
                while let Some(c) = it.next_choice(after) {
                    let mut q = p.clone();
                    q.push(c);
                    choices.push(q);
                    after = c;
                }
                choices
            })
            .collect();
    }
    out
}

/// Maps `f` over every code of `space` on `n` bands, keeping `Some` results,
/// with the work split across `jobs` threads by code prefix. The output is in
/// lexicographic code order whatever `jobs` is.
pub fn par_collect<T, F>(space: CodeSpace, n: usize, jobs: usize, f: F) -> Vec<(FlatBasketCode, T)>
where
    T: Send,
    F: Fn(&FlatBasketCode) -> Option<T> + Sync,
{
    let run = |prefix: &Vec<usize>| -> Vec<(FlatBasketCode, T)> {
        CodeIter::with_prefix(space, n, prefix)
            .expect("prefix comes from the generator")
            .filter_map(|c| f(&c).map(|v| (c, v)))
            .collect()
    };
    let mut out: Vec<(FlatBasketCode, T)> = if jobs <= 1 {
        run(&Vec::new())
    } else {
        let parts = prefixes(space, n, 4);
        let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("thread pool");
        pool.install(|| parts.par_iter().map(run).collect::<Vec<_>>()).into_iter().flatten().collect()
    };
    out.sort_by(|a, b| compare_codes(&a.0, &b.0));
    out
}

/// Canonical codes on `n` bands, collected with `jobs` threads.
pub fn canonical_codes(n: usize, jobs: usize) -> Vec<FlatBasketCode> {
    par_collect(CodeSpace::Normalized, n, jobs, |c| is_canonical(c).then_some(())).into_iter().map(|(c, _)| c).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AtlasEntry {
    pub code: FlatBasketCode,
    #[serde(flatten)]
    pub fingerprint: Fingerprint,
}

/// Fingerprint of every symmetry class on `n` bands, ordered by code.
pub fn classify(n: usize, budget: &Budget, jobs: usize) -> Result<Vec<AtlasEntry>, EnumerateError> {
    budget.check_classify(n)?;
    Ok(par_collect(CodeSpace::Normalized, n, jobs, |c| is_canonical(c).then(|| fingerprint(c)))
        .into_iter()
        .map(|(code, fingerprint)| AtlasEntry { code, fingerprint })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchHit {
    pub code: FlatBasketCode,
    pub fingerprint: Fingerprint,
    pub report: String,
}

/// First code of `space`, in order of band count and then lexicographically,
/// whose fingerprint equals `target`.
///
/// A hit only means the invariants agree; it does not prove that the code
/// presents the target link.
pub fn search_min_code(
    target: &Fingerprint,
    max_n: usize,
    space: CodeSpace,
    budget: &Budget,
    jobs: usize,
) -> Result<Option<SearchHit>, EnumerateError> {
    budget.check_classify(max_n)?;
    for n in 0..=max_n {
        // the component count has the parity of n + 1
        if (n + 1) % 2 != target.components % 2 {
            continue;
        }
        let hits = par_collect(space, n, jobs, |c| fingerprint_matches(c, target).then_some(()));
        if let Some((code, ())) = hits.into_iter().next() {
            let report = format!(
                "matched by invariant fingerprint only, not a proof of link equivalence; \
                 no code on fewer than {n} bands has this fingerprint"
            );
            return Ok(Some(SearchHit { fingerprint: target.clone(), code, report }));
        }
    }
    Ok(None)
}

/// Cheap invariants first, the Seifert-matrix ones last.
fn fingerprint_matches(code: &FlatBasketCode, target: &Fingerprint) -> bool {
    if trace_components(code).count != target.components {
        return false;
    }
    let link = decode(code);
    let mut lk: Vec<i64> = link.linking_numbers().iter().map(|&(_, _, v)| v.abs()).collect();
    lk.sort_unstable();
    if lk != target.linking {
        return false;
    }
    fingerprint(code) == *target
}
