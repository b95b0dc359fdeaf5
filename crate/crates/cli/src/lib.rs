//! Command implementations behind the `palrich` binary.
//!
//! Each command returns a [`Report`]; the binary only prints it and exits
//! with its code.

use clap::{Args, Parser, Subcommand};
use palrich::class_p::{
    class_p_decomposition, conjugate_to_class_p, mark_maps, markedness, pret_marker,
};
use palrich::language::{derived_word, richness_audit};
use palrich::morphism::DEFAULT_LENGTH_CAP;
use palrich::palindrome::{non_richness_witness, richness_report};
use palrich::transfer::{certify_binary, construct_from_rich, derived_substitution};
use palrich::{Error, LanguageView, Morphism, Word, WordSource};
use serde::Serialize;
use serde_json::{json, Map, Value};

pub const EXIT_COMPUTED: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "palrich",
    version,
    about = "Palindromic richness of words and morphisms"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Global {
    /// Print a single JSON object instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Token separator for multi-character symbols.
    #[arg(long, global = true)]
    pub sep: Option<String>,
    /// Longest prefix any computation may materialize.
    #[arg(long, global = true, default_value_t = DEFAULT_LENGTH_CAP)]
    pub cap: usize,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Richness of a word, or a richness audit of a source's language.
    Analyze {
        input: String,
        #[arg(long, default_value_t = 12)]
        horizon: usize,
        #[arg(long, default_value_t = 6)]
        max_len: usize,
    },
    /// Classify a morphism, find its marker or list its conjugates.
    Morphism {
        spec: String,
        #[arg(long)]
        classify: bool,
        #[arg(long)]
        marker: bool,
        #[arg(long)]
        chain: bool,
    },
    /// Decide the binary richness-preservation criterion.
    Certify { spec: String },
    /// Derived word of a source with respect to a factor.
    Derive {
        source: String,
        #[arg(long)]
        factor: String,
        #[arg(long, default_value_t = 50)]
        length: usize,
    },
    /// Certified substitutions built from the return words to a factor.
    Construct {
        source: String,
        #[arg(long)]
        factor: String,
        #[arg(long, default_value_t = 10)]
        limit: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub warnings: Vec<String>,
    pub exit_code: i32,
}

struct Outcome {
    result: Value,
    warnings: Vec<String>,
    exit_code: i32,
}

impl Outcome {
    fn computed(result: Value) -> Self {
        Outcome {
            result,
            warnings: Vec::new(),
            exit_code: EXIT_COMPUTED,
        }
    }
}

/// Runs a parsed command line; `argv` is echoed back in the report.
pub fn run(cli: &Cli, argv: Vec<String>) -> Report {
    let g = &cli.global;
    let outcome = match &cli.command {
        Command::Analyze {
            input,
            horizon,
            max_len,
        } => analyze(g, input, *horizon, *max_len),
        Command::Morphism {
            spec,
            classify,
            marker,
            chain,
        } => morphism(g, spec, *classify, *marker, *chain),
        Command::Certify { spec } => certify(g, spec),
        Command::Derive {
            source,
            factor,
            length,
        } => derive(g, source, factor, *length),
        Command::Construct {
            source,
            factor,
            limit,
        } => construct(g, source, factor, *limit),
    };
    match outcome {
        Ok(o) => Report {
            command: argv,
            result: Some(o.result),
            error: None,
            warnings: o.warnings,
            exit_code: o.exit_code,
        },
        Err(e) => Report {
            command: argv,
            result: None,
            error: Some(e.to_string()),
            warnings: Vec::new(),
            exit_code: EXIT_USAGE,
        },
    }
}

fn to_value<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("library types serialize to JSON")
}

fn is_source(input: &str) -> bool {
    ["finite:", "periodic:", "fix:", "img:"]
        .iter()
        .any(|p| input.trim_start().starts_with(p))
}

fn analyze(g: &Global, input: &str, horizon: usize, max_len: usize) -> palrich::Result<Outcome> {
    let sep = g.sep.as_deref();
    if !is_source(input) {
        let u = Word::parse(input, sep)?;
        let mut result = Map::new();
        result.insert("word".into(), to_value(&u));
        result.insert("richness".into(), to_value(&richness_report(&u)));
        let mut warnings = Vec::new();
        if u.alphabet().size() == 2 {
            result.insert("witness".into(), to_value(&non_richness_witness(&u)?));
        } else {
            warnings.push("non-richness witness needs a binary alphabet; skipped".into());
        }
        return Ok(Outcome {
            result: Value::Object(result),
            warnings,
            exit_code: EXIT_COMPUTED,
        });
    }

    let source = WordSource::parse(input, sep)?;
    let view = LanguageView::build_with_cap(&source, horizon, g.cap)?;
    let up_to = max_len.min(horizon);
    let closed = view.reversal_closed(up_to);
    let mut warnings = Vec::new();
    if !view.is_exact(horizon) {
        warnings.push(format!(
            "factor sets come from a {}-letter prefix and may be incomplete",
            view.prefix().len()
        ));
    }
    let audit = match richness_audit(&view, max_len) {
        Ok(report) => Some(report),
        Err(e @ Error::NotReversalClosed { .. }) => {
            warnings.push(format!("audit skipped: {e}"));
            None
        }
        Err(e) => return Err(e),
    };
    let result = json!({
        "source": source.to_string(),
        "horizon": view.horizon(),
        "prefix": richness_report(view.prefix()),
        "reversal_closed": closed,
        "audit": audit,
    });
    Ok(Outcome {
        result,
        warnings,
        exit_code: EXIT_COMPUTED,
    })
}

/// The classification block; properties that need an endomorphism or an
/// acyclic morphism are null when they do not apply.
pub fn classification(phi: &Morphism) -> palrich::Result<Value> {
    let marker = pret_marker(phi).map(|w| w.marker);
    let maps = mark_maps(phi).ok();
    let mk = markedness(phi).ok();
    Ok(json!({
        "cyclic": phi.is_cyclic()?,
        "primitive": phi.is_primitive().ok(),
        "class_p": class_p_decomposition(phi),
        "conjugate_to_class_p": conjugate_to_class_p(phi).ok(),
        "pret": marker,
        "marked": mk.map(|m| m.marked),
        "well_marked": mk.map(|m| m.well_marked),
        "rho": maps.as_ref().map(|m| m.rho_symbols()),
        "lambda": maps.as_ref().map(|m| m.lambda_symbols()),
    }))
}

fn morphism(
    g: &Global,
    spec: &str,
    classify: bool,
    marker: bool,
    chain: bool,
) -> palrich::Result<Outcome> {
    let phi = Morphism::parse(spec, g.sep.as_deref())?;
    let classify = classify || !(marker || chain);
    let mut result = Map::new();
    result.insert("morphism".into(), to_value(&phi));
    let mut exit_code = EXIT_COMPUTED;
    if classify {
        result.insert("classification".into(), classification(&phi)?);
    }
    if marker {
        let witness = pret_marker(&phi);
        if witness.is_none() {
            exit_code = EXIT_NEGATIVE;
        }
        result.insert("marker".into(), to_value(&witness));
    }
    if chain {
        result.insert("chain".into(), to_value(&phi.conjugation_chain()?));
    }
    Ok(Outcome {
        result: Value::Object(result),
        warnings: Vec::new(),
        exit_code,
    })
}

fn certify(g: &Global, spec: &str) -> palrich::Result<Outcome> {
    let phi = Morphism::parse(spec, g.sep.as_deref())?;
    let certificate = certify_binary(&phi)?;
    let exit_code = if certificate.verdict {
        EXIT_COMPUTED
    } else {
        EXIT_NEGATIVE
    };
    Ok(Outcome {
        result: to_value(&certificate),
        warnings: Vec::new(),
        exit_code,
    })
}

fn derive(g: &Global, source: &str, factor: &str, length: usize) -> palrich::Result<Outcome> {
    let source = WordSource::parse(source, g.sep.as_deref())?;
    let p = Word::parse_in(source.alphabet(), factor)?;
    let derived = derived_word(&source, &p, length, g.cap)?;
    let mut out = Outcome::computed(to_value(&derived));
    if let WordSource::FixedPoint { morphism, seed } = &source {
        let prefix = source.prefix(p.len(), g.cap)?;
        if p.is_palindrome() && prefix == p {
            match derived_substitution(morphism, *seed, &p) {
                Ok(s) => {
                    out.result["substitution"] = to_value(&s);
                }
                Err(e) => out.warnings.push(format!("no derived substitution: {e}")),
            }
        }
    }
    Ok(out)
}

fn construct(g: &Global, source: &str, factor: &str, limit: usize) -> palrich::Result<Outcome> {
    let source = WordSource::parse(source, g.sep.as_deref())?;
    let w = Word::parse_in(source.alphabet(), factor)?;
    let built = construct_from_rich(&source, &w)?;
    let total = built.len();
    let items: Vec<Value> = built
        .into_iter()
        .take(limit)
        .map(|c| {
            json!({
                "morphism": c.morphism,
                "perron": c.morphism.perron().ok(),
                "certificate": c.certificate,
            })
        })
        .collect();
    let mut out = Outcome::computed(json!({ "found": total, "substitutions": items }));
    if total > limit {
        out.warnings
            .push(format!("showing {limit} of {total} substitutions"));
    }
    Ok(out)
}

/// Human-readable rendering; only the JSON form is stable.
pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    if let Some(e) = &report.error {
        out.push_str(&format!("error: {e}\n"));
    }
    if let Some(result) = &report.result {
        write_value(&mut out, result, 0);
    }
    for w in &report.warnings {
        out.push_str(&format!("warning: {w}\n"));
    }
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) if s.is_empty() => Some("ε".into()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => Some(
            items
                .iter()
                .map(|i| scalar(i).unwrap_or_default())
                .collect::<Vec<_>>()
                .join(", "),
        ),
        _ => None,
    }
}

fn write_value(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, item) in map {
                match scalar(item) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        write_value(out, item, depth + 1);
                    }
                }
            }
        }
        Value::Array(items) => {
            for (i, item) in items.iter().enumerate() {
                match scalar(item) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}[{i}]\n"));
                        write_value(out, item, depth + 1);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}
