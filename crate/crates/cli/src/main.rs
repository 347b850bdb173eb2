use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use schurkit::shapes::{
    edge_sequence, edge_sequence_window, ribbon_check, Composition, Partition, ShapeError, SkewShape,
};
use schurkit::symfunc::{basis_element, kostka, BasisKind};
use schurkit::tableaux::{
    decode_binary, decode_integral, enumerate_matrices, enumerate_ssyt, tableau_from_chain, NatMatrix,
    SemistandardTableau, TableauError, TableauMode,
};
use schurkit::verify::{run_suite, Bounds, Suite};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "schurkit", version, about = "Exact computations with partitions, tableaux and Schur functions")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    out: Format,
    /// Refuse requests above this degree.
    #[arg(long, global = true, env = "SCHURKIT_MAX_DEGREE", default_value_t = 12)]
    max_degree: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    M,
    E,
    H,
    P,
    S,
}

#[derive(Clone, Copy, ValueEnum)]
enum Encoding {
    Integral,
    Binary,
}

#[derive(Subcommand)]
enum Command {
    /// Schur expansion of m, e, h, p or s indexed by a composition.
    Expand {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, allow_hyphen_values = true)]
        index: Composition,
    },
    /// Kostka number of a (skew) shape and weight.
    Kostka {
        /// `outer` or `outer/inner`, e.g. `3,2/1`.
        #[arg(long)]
        shape: String,
        #[arg(long, required_unless_present = "table")]
        weight: Option<Composition>,
        /// Use the elementary functions (vertical strips).
        #[arg(long)]
        primed: bool,
        /// Print the value for every partition weight.
        #[arg(long)]
        table: bool,
    },
    /// Semistandard tableaux of a shape and weight.
    Ssyt {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        weight: Composition,
        /// Print only the number of tableaux.
        #[arg(long)]
        count: bool,
    },
    /// Matrices with prescribed row and column sums.
    Matrices {
        #[arg(long)]
        rows: Composition,
        #[arg(long)]
        cols: Composition,
        /// Restrict to 0/1 entries.
        #[arg(long)]
        binary: bool,
        #[arg(long)]
        count: bool,
    },
    /// Matrix encoding of a tableau given as JSON.
    Encode {
        /// File holding `{"chain": [[..], ..], "mode": "col"}`.
        #[arg(long)]
        tableau: String,
        #[arg(long, value_enum)]
        mode: Encoding,
    },
    /// Tableau from its matrix encoding.
    Decode {
        /// Rows separated by `;`, entries by `,`.
        #[arg(long)]
        matrix: String,
        #[arg(long)]
        inner: Partition,
        #[arg(long, value_enum)]
        mode: Encoding,
    },
    /// Whether lambda/mu is a k-ribbon, and its height.
    Ribbon {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        k: usize,
    },
    /// Edge sequence of a partition.
    Edgeseq {
        #[arg(long)]
        lambda: Partition,
        /// Inclusive range of diagonals `lo:hi`.
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
    },
    /// Run bounded property suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 5)]
        max_size: usize,
        #[arg(long, default_value_t = 3)]
        max_vars: usize,
        #[arg(long, default_value_t = 4)]
        max_deg: usize,
    },
}

enum Failure {
    /// Malformed input or a request outside the configured bounds.
    Usage(String),
    /// Well-formed input that is mathematically invalid.
    Domain(String),
}

impl From<ShapeError> for Failure {
    fn from(e: ShapeError) -> Self {
        match e {
            ShapeError::Parse { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

impl From<TableauError> for Failure {
    fn from(e: TableauError) -> Self {
        match e {
            TableauError::Parse { .. } | TableauError::Ragged | TableauError::Shape(ShapeError::Parse { .. }) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Domain(e.to_string()),
        }
    }
}

struct Output {
    text: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Output { text: text.into(), json, ok: true }
    }
}

fn guard(degree: usize, max: usize) -> Result<(), Failure> {
    if degree > max {
        return Err(Failure::Usage(format!("degree {degree} exceeds the limit {max} (--max-degree)")));
    }
    Ok(())
}

fn basis_kind(k: Kind) -> BasisKind {
    match k {
        Kind::M => BasisKind::M,
        Kind::E => BasisKind::E,
        Kind::H => BasisKind::H,
        Kind::P => BasisKind::P,
        Kind::S => BasisKind::S,
    }
}

fn render_tableau(t: &SemistandardTableau) -> Value {
    serde_json::to_value(t).expect("tableaux serialise")
}

fn parse_window(s: &str) -> Result<(i64, i64), Failure> {
    let bad = || Failure::Usage(format!("window {s:?} is not of the form lo:hi"));
    let (lo, hi) = s.split_once(':').ok_or_else(bad)?;
    Ok((lo.trim().parse().map_err(|_| bad())?, hi.trim().parse().map_err(|_| bad())?))
}

fn read_tableau(path: &str) -> Result<SemistandardTableau, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))?;
    let bad = |why: &str| Failure::Usage(format!("{path}: {why}"));
    let value: Value = serde_json::from_str(&text).map_err(|e| bad(&e.to_string()))?;
    let chain: Vec<Vec<usize>> = value
        .get("chain")
        .cloned()
        .ok_or_else(|| bad("missing \"chain\""))
        .and_then(|c| serde_json::from_value(c).map_err(|e| bad(&e.to_string())))?;
    let mode: TableauMode = match value.get("mode") {
        None => TableauMode::ColumnStrict,
        Some(m) => serde_json::from_value(m.clone()).map_err(|e| bad(&e.to_string()))?,
    };
    let chain = chain
        .into_iter()
        .enumerate()
        .map(|(i, parts)| Partition::new(parts).map_err(|e| Failure::Domain(format!("chain entry {i}: {e}"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(tableau_from_chain(chain, mode)?)
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let max = cli.max_degree;
    Ok(match &cli.command {
        Command::Expand { kind, index } => {
            guard(index.size(), max)?;
            let f = basis_element(basis_kind(*kind), index).map_err(|e| Failure::Domain(e.to_string()))?;
            Output::new(f.to_string(), f.to_json())
        }
        Command::Kostka { shape, weight, primed, table } => {
            let shape: SkewShape = shape.parse()?;
            guard(shape.outer().size(), max)?;
            let value = |alpha: &Composition| kostka(shape.outer(), shape.inner(), alpha, *primed);
            if *table {
                let rows: Vec<(Partition, String)> = Partition::all_of_size(shape.size())
                    .into_iter()
                    .map(|a| {
                        let k = value(&a.as_composition()).to_string();
                        (a, k)
                    })
                    .collect();
                let text = rows.iter().map(|(a, k)| format!("{a}\t{k}")).collect::<Vec<_>>().join("\n");
                let json_rows: Vec<Value> = rows
                    .iter()
                    .map(|(a, k)| json!({ "weight": a.parts(), "value": k.parse::<u64>().map_or(json!(k), |v| json!(v)) }))
                    .collect();
                Output::new(text, json!({ "shape": shape.to_string(), "primed": primed, "table": json_rows }))
            } else {
                let weight = weight.as_ref().expect("clap requires a weight without --table");
                let k = value(weight).to_string();
                let number = k.parse::<u64>().map_or(json!(k), |v| json!(v));
                let j =
                    json!({ "shape": shape.to_string(), "weight": weight.parts(), "primed": primed, "value": number });
                Output::new(k, j)
            }
        }
        Command::Ssyt { shape, weight, count } => {
            let shape: SkewShape = shape.parse()?;
            guard(shape.outer().size(), max)?;
            let tableaux: Vec<SemistandardTableau> = enumerate_ssyt(&shape, weight).collect();
            let text = if *count {
                tableaux.len().to_string()
            } else {
                let renders = tableaux.iter().map(|t| t.render()).collect::<Result<Vec<_>, _>>()?;
                renders.join("\n\n")
            };
            let mut j = json!({ "shape": shape.to_string(), "weight": weight.parts(), "count": tableaux.len() });
            if !*count {
                j["tableaux"] = tableaux.iter().map(render_tableau).collect();
            }
            Output::new(text, j)
        }
        Command::Matrices { rows, cols, binary, count } => {
            guard(rows.size().max(cols.size()), max)?;
            let ms: Vec<NatMatrix> = enumerate_matrices(rows, cols, *binary).collect();
            let text = if *count {
                ms.len().to_string()
            } else {
                ms.iter().map(NatMatrix::to_string).collect::<Vec<_>>().join("\n")
            };
            let mut j = json!({ "rows": rows.parts(), "cols": cols.parts(), "binary": binary, "count": ms.len() });
            if !*count {
                j["matrices"] = ms.iter().map(|m| json!(m.rows())).collect();
            }
            Output::new(text, j)
        }
        Command::Encode { tableau, mode } => {
            let t = read_tableau(tableau)?;
            let m = match mode {
                Encoding::Integral => t.integral_encoding()?,
                Encoding::Binary => t.binary_encoding()?,
            };
            Output::new(m.to_string(), json!({ "rows": m.rows(), "binary": m.is_binary() }))
        }
        Command::Decode { matrix, inner, mode } => {
            let binary = matches!(mode, Encoding::Binary);
            let m = NatMatrix::parse(matrix, binary)?;
            let t = if binary { decode_binary(&m, inner)? } else { decode_integral(&m, inner)? };
            let j = render_tableau(&t);
            Output::new(j.to_string(), j)
        }
        Command::Ribbon { mu, lambda, k } => {
            let height = ribbon_check(mu, lambda, *k);
            let text = height.map_or_else(|| "not a k-ribbon".to_string(), |h| format!("height={h}"));
            Output::new(text, json!({ "k": k, "ribbon": height.is_some(), "height": height }))
        }
        Command::Edgeseq { lambda, window } => {
            let e = match window {
                None => edge_sequence(lambda),
                Some(w) => {
                    let (lo, hi) = parse_window(w)?;
                    edge_sequence_window(lambda, lo, hi)?
                }
            };
            let bits: String = e.bits().iter().map(|&b| if b { '1' } else { '0' }).collect();
            Output::new(e.to_string(), json!({ "offset": e.offset(), "bits": bits }))
        }
        Command::Verify { suite, max_size, max_vars, max_deg } => {
            let suite: Suite = suite.parse().map_err(Failure::Usage)?;
            guard((*max_size).max(*max_deg), max)?;
            let bounds = Bounds { max_size: *max_size, max_vars: *max_vars, max_deg: *max_deg };
            let reports = run_suite(suite, &bounds);
            let text = reports.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n");
            let mut out = Output::new(text, serde_json::to_value(&reports).expect("reports serialise"));
            out.ok = reports.iter().all(|r| r.passed);
            out
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            match cli.out {
                Format::Text => println!("{}", out.text),
                Format::Json => println!("{}", out.json),
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn windows() {
        assert!(matches!(parse_window("-9:9"), Ok((-9, 9))));
        assert!(matches!(parse_window("9"), Err(Failure::Usage(_))));
        assert!(matches!(parse_window("a:b"), Err(Failure::Usage(_))));
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn degree_guard() {
        assert!(guard(12, 12).is_ok());
        assert!(matches!(guard(13, 12), Err(Failure::Usage(_))));
    }
}
