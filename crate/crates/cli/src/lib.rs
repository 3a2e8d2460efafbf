//! Command-line front end: argument grammar, dispatch and output formats.

pub mod render;

use std::io::{self, Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};
use thiserror::Error;

use flatbasket::basket::{decode, parse_code, trace_components, Passage};
use flatbasket::braid::{closure_component_count, parse_braid, to_tw_form, BraidWord};
use flatbasket::coder::{encode_braid, encode_w, Encoding};
use flatbasket::enumerate::{classify, enumerate_codes, search_min_code, Budget, CodeSpace};
use flatbasket::invariants::{Fingerprint, Invariants, LaurentPolynomial};
use flatbasket::FlatBasketCode;

use render::{render, RenderSpec};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Domain(String),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) | CliError::Io(_) => 1,
        }
    }
}

fn domain(e: impl std::fmt::Display) -> CliError {
    CliError::Domain(e.to_string())
}

#[derive(Debug, Parser)]
#[command(name = "flatbasket", version, about = "Flat plumbing basket codes for links")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EncodeEmit {
    Code,
    C1,
    Labels,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DecodeEmit {
    Components,
    Gauss,
    Pd,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InvariantsEmit {
    Fingerprint,
    Matrix,
    Alexander,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Space {
    /// One code per relabeling class.
    Normalized,
    /// Every labelling of every chord diagram.
    Labelled,
}

impl From<Space> for CodeSpace {
    fn from(s: Space) -> Self {
        match s {
            Space::Normalized => CodeSpace::Normalized,
            Space::Labelled => CodeSpace::Labelled,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Encode a braid (signed generator indices) as a flat basket code.
    Encode {
        /// Braid word such as "1 -2 1"; read from stdin when omitted.
        #[arg(allow_hyphen_values = true)]
        braid: Option<String>,
        #[arg(long)]
        strands: Option<usize>,
        /// Freely reduce W before encoding.
        #[arg(long)]
        reduce: bool,
        /// The input is already W; do not prepend the inverse twist.
        #[arg(long)]
        no_tw_prefix: bool,
        #[arg(long, value_enum, default_value_t = EncodeEmit::Code)]
        emit: EncodeEmit,
    },
    /// Decode a code into its boundary link diagram.
    Decode {
        code: Option<String>,
        /// Accept arbitrary labels and rename them by first appearance.
        #[arg(long)]
        lenient: bool,
        #[arg(long, value_enum, default_value_t = DecodeEmit::Components)]
        emit: DecodeEmit,
    },
    /// Seifert matrix and the invariants derived from it.
    Invariants {
        code: Option<String>,
        #[arg(long)]
        lenient: bool,
        #[arg(long, value_enum, default_value_t = InvariantsEmit::Fingerprint)]
        emit: InvariantsEmit,
    },
    /// List normal-form codes on N bands, or write a JSON-lines atlas.
    Enumerate {
        n: usize,
        /// Only the least code of each rotation/reflection class.
        #[arg(long)]
        canonical: bool,
        /// One JSON record with the fingerprint per canonical class.
        #[arg(long)]
        atlas: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Shortest, lexicographically least code with a given fingerprint.
    Search {
        /// Code whose fingerprint is the target.
        #[arg(long, conflicts_with = "target")]
        like: Option<String>,
        /// Read `--like` with arbitrary labels, renamed by first appearance.
        #[arg(long)]
        lenient: bool,
        /// Target fingerprint as JSON.
        #[arg(long)]
        target: Option<String>,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Space::Labelled)]
        space: Space,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// SVG chord diagram of a code.
    Render {
        code: Option<String>,
        #[arg(long)]
        lenient: bool,
        #[arg(long, default_value_t = 400)]
        size: u32,
        #[arg(long)]
        no_labels: bool,
        #[arg(long)]
        no_shading: bool,
    },
    /// Encode a braid, decode the result and compare with the braid closure.
    Verify {
        #[arg(allow_hyphen_values = true)]
        braid: Option<String>,
        #[arg(long)]
        strands: Option<usize>,
        #[arg(long)]
        reduce: bool,
        /// Expected fingerprint fields as JSON; only the fields given are compared.
        #[arg(long)]
        expect: Option<String>,
    },
}

fn input(arg: Option<String>, stdin: &mut dyn Read) -> Result<String, CliError> {
    match arg {
        Some(s) => Ok(s),
        None => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn read_code(arg: Option<String>, lenient: bool, stdin: &mut dyn Read) -> Result<FlatBasketCode, CliError> {
    parse_code(&input(arg, stdin)?, !lenient).map_err(domain)
}

fn read_braid(arg: Option<String>, strands: Option<usize>, stdin: &mut dyn Read) -> Result<BraidWord, CliError> {
    parse_braid(&input(arg, stdin)?, strands).map_err(domain)
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(sep)
}

fn encoding_json(enc: &Encoding) -> Value {
    json!({
        "strands": enc.w.strands(),
        "w": enc.w.to_signed(),
        "m": enc.letter_count(),
        "s": enc.positive_count(),
        "labels": enc.labeling.labels(),
        "c1": enc.c1.word(),
        "code": enc.code.word(),
        "bands": enc.code.bands(),
    })
}

fn gauss_lines(code: &FlatBasketCode) -> Vec<Vec<i64>> {
    decode(code)
        .gauss_code()
        .iter()
        .map(|comp| {
            comp.iter()
                .map(|&(c, p)| match p {
                    Passage::Over => c as i64 + 1,
                    Passage::Under => -(c as i64 + 1),
                })
                .collect()
        })
        .collect()
}

fn parse_alexander(v: &Value) -> Result<LaurentPolynomial, CliError> {
    let text = v.as_str().ok_or_else(|| CliError::Usage("alexander must be a string".into()))?;
    text.parse::<LaurentPolynomial>().map(|p| p.normalized()).map_err(|e| CliError::Usage(e.to_string()))
}

fn parse_det(v: &Value) -> Result<BigInt, CliError> {
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        _ => return Err(CliError::Usage("det must be a number".into())),
    };
    text.trim().parse::<BigInt>().map(|d| if d.sign() == num_bigint::Sign::Minus { -d } else { d }).map_err(|e| CliError::Usage(format!("det: {e}")))
}

fn parse_lk(v: &Value) -> Result<Vec<i64>, CliError> {
    let mut lk = v
        .as_array()
        .ok_or_else(|| CliError::Usage("lk must be an array".into()))?
        .iter()
        .map(|x| x.as_i64().map(i64::abs).ok_or_else(|| CliError::Usage("lk entries must be integers".into())))
        .collect::<Result<Vec<_>, _>>()?;
    lk.sort_unstable();
    Ok(lk)
}

fn parse_json(text: &str) -> Result<serde_json::Map<String, Value>, CliError> {
    match serde_json::from_str::<Value>(text) {
        Ok(Value::Object(m)) => Ok(m),
        Ok(_) => Err(CliError::Usage("expected a JSON object".into())),
        Err(e) => Err(CliError::Usage(format!("invalid JSON at line {}, column {}: {e}", e.line(), e.column()))),
    }
}

fn field<'a>(m: &'a serde_json::Map<String, Value>, key: &str) -> Result<&'a Value, CliError> {
    m.get(key).ok_or_else(|| CliError::Usage(format!("target is missing `{key}`")))
}

/// Full fingerprint from a JSON record shaped like the atlas output.
pub fn parse_fingerprint(text: &str) -> Result<Fingerprint, CliError> {
    let m = parse_json(text)?;
    let components = field(&m, "components")?
        .as_u64()
        .ok_or_else(|| CliError::Usage("components must be a non-negative integer".into()))? as usize;
    let signature = field(&m, "signature")?.as_i64().ok_or_else(|| CliError::Usage("signature must be an integer".into()))?;
    Ok(Fingerprint {
        components,
        alexander: parse_alexander(field(&m, "alexander")?)?,
        determinant: parse_det(field(&m, "det")?)?,
        signature: signature.abs(),
        linking: parse_lk(field(&m, "lk")?)?,
    })
}

/// Fields of `expected` that disagree with `actual`.
fn mismatches(expected: &str, actual: &Fingerprint) -> Result<Vec<String>, CliError> {
    let m = parse_json(expected)?;
    let mut bad = Vec::new();
    for (key, v) in &m {
        let ok = match key.as_str() {
            "components" => v.as_u64() == Some(actual.components as u64),
            "alexander" => parse_alexander(v)? == actual.alexander,
            "det" => parse_det(v)? == actual.determinant,
            "signature" => v.as_i64().map(i64::abs) == Some(actual.signature),
            "lk" => parse_lk(v)? == actual.linking,
            "code" => true,
            other => return Err(CliError::Usage(format!("unknown fingerprint field `{other}`"))),
        };
        if !ok {
            bad.push(format!("{key}: expected {v}, got {}", serde_json::to_value(actual).expect("serializable")[key]));
        }
    }
    Ok(bad)
}

pub fn execute(cli: Cli, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Encode { braid, strands, reduce, no_tw_prefix, emit } => {
            let b = read_braid(braid, strands, stdin)?;
            let enc = if no_tw_prefix {
                encode_w(&if reduce { b.free_reduce() } else { b })
            } else {
                encode_braid(&b, reduce)
            };
            match emit {
                EncodeEmit::Code => writeln!(out, "{}", enc.code)?,
                EncodeEmit::C1 => writeln!(out, "{}", join(enc.c1.word(), ","))?,
                EncodeEmit::Labels => writeln!(out, "{}", join(enc.labeling.labels(), ","))?,
                EncodeEmit::Json => writeln!(out, "{}", encoding_json(&enc))?,
            }
        }
        Command::Decode { code, lenient, emit } => {
            let code = read_code(code, lenient, stdin)?;
            match emit {
                DecodeEmit::Components => writeln!(out, "{}", trace_components(&code).count)?,
                DecodeEmit::Gauss => {
                    for line in gauss_lines(&code) {
                        writeln!(out, "{}", join(&line, " "))?;
                    }
                }
                DecodeEmit::Pd => {
                    for x in decode(&code).pd_code() {
                        writeln!(out, "X[{}]", join(&x, ","))?;
                    }
                }
                DecodeEmit::Json => {
                    let link = decode(&code);
                    let signs: Vec<i8> = link.crossings().iter().map(|c| c.sign).collect();
                    let lk: Vec<[i64; 3]> =
                        link.linking_numbers().iter().map(|&(a, b, v)| [a as i64, b as i64, v]).collect();
                    let record = json!({
                        "code": code.word(),
                        "components": link.component_count(),
                        "crossings": link.crossing_count(),
                        "signs": signs,
                        "gauss": gauss_lines(&code),
                        "pd": link.pd_code(),
                        "linking": lk,
                    });
                    writeln!(out, "{record}")?;
                }
            }
        }
        Command::Invariants { code, lenient, emit } => {
            let code = read_code(code, lenient, stdin)?;
            let inv = Invariants::of(&code);
            match emit {
                InvariantsEmit::Fingerprint => writeln!(out, "{}", inv.fingerprint())?,
                InvariantsEmit::Matrix => write!(out, "{}", inv.seifert)?,
                InvariantsEmit::Alexander => writeln!(out, "{}", inv.alexander)?,
                InvariantsEmit::Json => {
                    let lk: Vec<[i64; 3]> = inv.linking.iter().map(|&(a, b, v)| [a as i64, b as i64, v]).collect();
                    let record = json!({
                        "code": code.word(),
                        "seifert": inv.seifert.entries(),
                        "alexander": inv.alexander.to_string(),
                        "det": serde_json::to_value(inv.fingerprint()).expect("serializable")["det"],
                        "signature": inv.signature,
                        "linking": lk,
                        "components": inv.components,
                        "fingerprint": inv.fingerprint(),
                    });
                    writeln!(out, "{record}")?;
                }
            }
        }
        Command::Enumerate { n, canonical, atlas, jobs } => {
            let budget = Budget::from_env();
            if atlas {
                for entry in classify(n, &budget, jobs.max(1)).map_err(domain)? {
                    writeln!(out, "{}", serde_json::to_string(&entry).expect("serializable"))?;
                }
            } else {
                budget.check_stream(n).map_err(domain)?;
                for code in enumerate_codes(n, canonical) {
                    writeln!(out, "{code}")?;
                }
            }
        }
        Command::Search { like, lenient, target, max_n, space, jobs } => {
            let fp = match (like, target) {
                (Some(c), None) => Invariants::of(&parse_code(&c, !lenient).map_err(domain)?).fingerprint(),
                (None, Some(t)) => parse_fingerprint(&t)?,
                _ => return Err(CliError::Usage("give exactly one of --like or --target".into())),
            };
            let hit = search_min_code(&fp, max_n, space.into(), &Budget::from_env(), jobs.max(1)).map_err(domain)?;
            let record = match hit {
                Some(h) => json!({ "code": h.code.word(), "bands": h.code.bands(), "fingerprint": h.fingerprint, "report": h.report }),
                None => json!({
                    "code": Value::Null,
                    "fingerprint": fp,
                    "report": format!("no code on at most {max_n} bands has this fingerprint"),
                }),
            };
            writeln!(out, "{record}")?;
        }
        Command::Render { code, lenient, size, no_labels, no_shading } => {
            if size == 0 {
                return Err(CliError::Usage("--size must be positive".into()));
            }
            let code = read_code(code, lenient, stdin)?;
            let mut spec = RenderSpec::new(code, size);
            spec.show_labels = !no_labels;
            spec.shade_crossings = !no_shading;
            write!(out, "{}", render(&spec))?;
        }
        Command::Verify { braid, strands, reduce, expect } => {
            let b = read_braid(braid, strands, stdin)?;
            let w = to_tw_form(&b, reduce);
            let tw = BraidWord::descending_twist(b.strands()).map_err(domain)?.concat(&w).map_err(domain)?;
            let closure = closure_component_count(&tw);
            let code = encode_w(&w).code;
            let basket = trace_components(&code).count;
            let relation = if closure == basket { "equal" } else { "DIFFER" };
            writeln!(out, "code: {code}")?;
            writeln!(out, "components: closure {closure}, basket {basket} ({relation})")?;
            let mut problems = Vec::new();
            if closure != basket {
                problems.push(format!("component counts differ: {closure} vs {basket}"));
            }
            if let Some(e) = expect {
                let fp = Invariants::of(&code).fingerprint();
                writeln!(out, "fingerprint: {fp}")?;
                problems.extend(mismatches(&e, &fp)?);
            }
            if !problems.is_empty() {
                return Err(CliError::Domain(problems.join("; ")));
            }
        }
    }
    Ok(())
}
