use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::thread;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use spinmod::abacus::{two_content, two_core, two_quotient, two_sign, two_weight};
use spinmod::characters::{
    brauer_max, divided, kleshchev, signature_string, CharLabel, Direction, FormalChar,
};
use spinmod::classify::{spin_irreducible, verify_suite, SuiteReport, VerifySuite};
use spinmod::degrees::spin_degree;
use spinmod::partitions::{eval_expr, Node};
use spinmod::regdouble::{
    dblreg, four_bar_core, four_bar_weight, spin_block, spin_regularization_entry,
};
use spinmod::rouquier::{assemble_e, PartMatrix, RouquierBlock};
use spinmod::{Partition, Residue};

/// Directory searched for `d_w<W>.txt` and `dbar_w<W>.txt` when `--d` or
/// `--dbar` is omitted.
const FIXTURE_ENV: &str = "SPINMOD_FIXTURES";

#[derive(Parser)]
#[command(
    name = "spinmod",
    version,
    about = "Spin characters of double covers of symmetric groups modulo 2"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the spin reduction is irreducible.
    Classify { partition: String },
    /// Degree of the spin character.
    Degree { partition: String },
    /// 2-core and 2-weight.
    Core2 { partition: String },
    /// 2-quotient, with core and weight.
    Quotient { partition: String },
    /// 2-sign.
    Sign { partition: String },
    /// Multiset of residues.
    Content { partition: String },
    /// Regularized double, with the spin decomposition entry there.
    Dblreg { partition: String },
    /// 4-bar core and weight.
    Barcore { partition: String },
    /// 2-block containing the spin character.
    Block { partition: String },
    /// Divided powers of e_i or f_i applied to a sum of labels such as `<11,9,7,5,4,1>+`.
    Branch {
        #[arg(required = true)]
        labels: Vec<String>,
        #[arg(short, long)]
        i: Residue,
        #[arg(short, long, default_value_t = 1)]
        r: usize,
        /// `e` (restrict) or `f` (induce).
        #[arg(long, default_value = "e")]
        dir: Direction,
    },
    /// Normal and conormal nodes of a 2-regular partition.
    Kleshchev {
        partition: String,
        #[arg(short, long)]
        i: Residue,
    },
    /// Decomposition data for the Rouquier block with core (c, ..., 1).
    Rouquier {
        #[arg(long)]
        core: usize,
        #[arg(long)]
        weight: usize,
        #[arg(long)]
        d: Option<PathBuf>,
        #[arg(long)]
        dbar: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Emit::E)]
        emit: Emit,
    },
    /// Run a verification suite, or `all` of them.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 16)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    #[value(name = "E")]
    E,
    #[value(name = "A")]
    A,
    #[value(name = "J")]
    J,
    Psi,
    Omega,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] spinmod::Error),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) | CliError::Failed(_) => 1,
        }
    }
}

type Out = Result<(String, Value), CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((text, value)) => {
            if cli.json {
                println!("{value}");
            } else {
                print!("{text}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}

fn partition(arg: &str) -> Result<Partition, CliError> {
    eval_expr(arg).map_err(|e| CliError::Usage(format!("bad partition {arg:?}: {e}")))
}

fn node_list(nodes: &[Node]) -> String {
    nodes
        .iter()
        .map(|n| n.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn run(command: Command) -> Out {
    match command {
        Command::Classify { partition: arg } => {
            let l = partition(&arg)?;
            let v = spin_irreducible(&l)?;
            let degree = spin_degree(&l)?;
            let w = v.witness.as_ref();
            let value = json!({
                "partition": l.to_string(),
                "irreducible": v.irreducible,
                "case": v.case.map(|c| c.to_string()),
                "tau": w.map(|w| w.tau.to_string()),
                "alpha": w.map(|w| w.alpha.to_string()),
                "b": w.map(|w| w.b),
                "dblreg": dblreg(&l).to_string(),
                "degree": degree.to_string(),
            });
            Ok((format!("{v}\n"), value))
        }
        Command::Degree { partition: arg } => {
            let l = partition(&arg)?;
            let d = spin_degree(&l)?;
            Ok((
                format!("{d}\n"),
                json!({"partition": l.to_string(), "degree": d.to_string()}),
            ))
        }
        Command::Core2 { partition: arg } => {
            let l = partition(&arg)?;
            let (core, weight) = (two_core(&l), two_weight(&l));
            Ok((
                format!("core={core} weight={weight}\n"),
                json!({"core": core.to_string(), "weight": weight}),
            ))
        }
        Command::Quotient { partition: arg } => {
            let l = partition(&arg)?;
            let (q0, q1) = two_quotient(&l);
            let (core, weight) = (two_core(&l), two_weight(&l));
            Ok((
                format!("({q0},{q1}) core={core} weight={weight}\n"),
                json!({"quotient": [q0.to_string(), q1.to_string()], "core": core.to_string(), "weight": weight}),
            ))
        }
        Command::Sign { partition: arg } => {
            let l = partition(&arg)?;
            let s = two_sign(&l);
            Ok((
                format!("{s:+}\n"),
                json!({"partition": l.to_string(), "sign": s}),
            ))
        }
        Command::Content { partition: arg } => {
            let l = partition(&arg)?;
            let c = two_content(&l);
            Ok((format!("{c}\n"), json!({"zeros": c.zeros, "ones": c.ones})))
        }
        Command::Dblreg { partition: arg } => {
            let l = partition(&arg)?;
            let (target, entry) = spin_regularization_entry(&l)?;
            Ok((
                format!("{target} entry={entry}\n"),
                json!({"dblreg": target.to_string(), "entry": entry}),
            ))
        }
        Command::Barcore { partition: arg } => {
            let l = partition(&arg)?;
            let core = four_bar_core(&l)?;
            let weight = four_bar_weight(&l)?;
            Ok((
                format!("{core} weight={weight}\n"),
                json!({"barcore": core.to_string(), "weight": weight}),
            ))
        }
        Command::Block { partition: arg } => {
            let l = partition(&arg)?;
            let b = spin_block(&l)?;
            let rouquier = b.is_rouquier();
            Ok((
                format!("{b}{}\n", if rouquier { " rouquier" } else { "" }),
                json!({"core": b.core.to_string(), "weight": b.weight, "rouquier": rouquier}),
            ))
        }
        Command::Branch { labels, i, r, dir } => {
            let parsed = labels
                .iter()
                .map(|s| {
                    s.parse::<CharLabel>()
                        .map_err(|e| CliError::Usage(format!("bad label {s:?}: {e}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let level = parsed[0].level();
            let chi = FormalChar::from_terms(level, parsed.into_iter().map(|l| (l, 1)))?;
            let image = divided(i, r, dir, &chi)?;
            let terms: Vec<Value> = image
                .terms()
                .map(|(l, c)| json!({"label": l.to_string(), "coeff": c.to_string()}))
                .collect();
            Ok((
                format!("{image}\n"),
                json!({"level": image.level(), "terms": terms}),
            ))
        }
        Command::Kleshchev { partition: arg, i } => {
            let mu = partition(&arg)?;
            let k = kleshchev(&mu, i)?;
            let down = brauer_max(&mu, i, Direction::Restrict)?;
            let up = brauer_max(&mu, i, Direction::Induce)?;
            let text = format!(
                "signature {}\nreduced {}\nnormal {}\nconormal {}\ne max {down}\nf max {up}\n",
                signature_string(&k.signature),
                signature_string(&k.reduced),
                node_list(&k.normal),
                node_list(&k.conormal),
            );
            let nodes = |v: &[Node]| v.iter().map(|n| [n.row, n.col]).collect::<Vec<_>>();
            let value = json!({
                "signature": signature_string(&k.signature),
                "reduced": signature_string(&k.reduced),
                "normal": nodes(&k.normal),
                "conormal": nodes(&k.conormal),
                "e_max": down.to_string(),
                "f_max": up.to_string(),
            });
            Ok((text, value))
        }
        Command::Rouquier {
            core,
            weight,
            d,
            dbar,
            emit,
        } => rouquier(core, weight, d, dbar, emit),
        Command::Verify { suite, max_n, seed } => verify(&suite, max_n, seed),
    }
}

fn matrix_json(m: &PartMatrix) -> Value {
    json!({
        "rows": m.rows().iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        "cols": m.cols().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "entries": m.entries(),
    })
}

fn char_json(chi: &FormalChar) -> Value {
    Value::Array(
        chi.terms()
            .map(|(l, c)| json!({"label": l.to_string(), "coeff": c.to_string()}))
            .collect(),
    )
}

fn fixture_path(
    given: Option<PathBuf>,
    stem: &str,
    weight: usize,
    flag: &str,
) -> Result<PathBuf, CliError> {
    if let Some(p) = given {
        return Ok(p);
    }
    let dir = std::env::var_os(FIXTURE_ENV).ok_or_else(|| {
        CliError::Usage(format!("{flag} is required when {FIXTURE_ENV} is unset"))
    })?;
    Ok(Path::new(&dir).join(format!("{stem}_w{weight}.txt")))
}

fn rouquier(
    core: usize,
    weight: usize,
    d: Option<PathBuf>,
    dbar: Option<PathBuf>,
    emit: Emit,
) -> Out {
    let block = RouquierBlock::new(core, weight)?;
    match emit {
        Emit::E | Emit::A | Emit::J => {
            let d = PartMatrix::load(&fixture_path(d, "d", weight, "--d")?)?;
            let dbar = PartMatrix::load(&fixture_path(dbar, "dbar", weight, "--dbar")?)?;
            let asm = assemble_e(&block, &d, &dbar)?;
            let m = match emit {
                Emit::E => &asm.e,
                Emit::A => &asm.a,
                _ => &asm.j,
            };
            let mut text = m.to_string();
            let mut value = matrix_json(m);
            if matches!(emit, Emit::E) {
                let labels: Vec<String> = asm.spin_rows.iter().map(|p| p.to_string()).collect();
                text.push_str(&format!("spin rows: {}\n", labels.join("; ")));
                value["spin_rows"] = json!(labels);
            }
            Ok((text, value))
        }
        Emit::Psi => {
            let mut text = String::new();
            let mut items = Vec::new();
            for (mu, psi) in block.psi_all()? {
                text.push_str(&format!("psi^{mu} = {psi}\n"));
                items.push(json!({"mu": mu.to_string(), "terms": char_json(&psi)}));
            }
            Ok((text, Value::Array(items)))
        }
        Emit::Omega => {
            let family = block.omega_all()?;
            let mut text = String::new();
            let mut items = Vec::new();
            for (k, lambda) in family.coeffs.cols().iter().enumerate() {
                let chi = &family.chars[lambda];
                let coeffs: Vec<(String, i64)> = family
                    .coeffs
                    .cols()
                    .iter()
                    .zip(&family.coeffs.entries()[k])
                    .filter(|(_, a)| **a != 0)
                    .map(|(mu, a)| (mu.to_string(), *a))
                    .collect();
                let combo: Vec<String> = coeffs
                    .iter()
                    .map(|(mu, a)| format!("{a}*psi^{mu}"))
                    .collect();
                text.push_str(&format!("omega^{lambda} = {} = {chi}\n", combo.join(" + ")));
                items.push(json!({
                    "lambda": lambda.to_string(),
                    "psi_coeffs": coeffs.iter().map(|(mu, a)| json!({"mu": mu, "coeff": a})).collect::<Vec<_>>(),
                    "terms": char_json(chi),
                }));
            }
            Ok((text, Value::Array(items)))
        }
    }
}

fn verify(name: &str, max_n: usize, seed: u64) -> Out {
    let suites: Vec<VerifySuite> = if name == "all" {
        VerifySuite::ALL.to_vec()
    } else {
        vec![name
            .parse()
            .map_err(|e: spinmod::Error| CliError::Usage(e.to_string()))?]
    };
    // Suites are independent; reports come back in the listed order.
    let reports: Vec<spinmod::Result<SuiteReport>> = thread::scope(|s| {
        let handles: Vec<_> = suites
            .iter()
            .map(|&suite| s.spawn(move || verify_suite(suite, max_n, seed)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite thread panicked"))
            .collect()
    });
    let reports = reports.into_iter().collect::<spinmod::Result<Vec<_>>>()?;
    let text: String = reports.iter().map(|r| format!("{r}\n")).collect();
    let value = Value::Array(
        reports
            .iter()
            .map(|r| {
                json!({
                    "suite": r.suite.to_string(),
                    "max_n": r.max_n,
                    "checked": r.checked,
                    "passed": r.passed(),
                    "failures": r.failures,
                })
            })
            .collect(),
    );
    if reports.iter().all(SuiteReport::passed) {
        Ok((text, value))
    } else {
        print!("{text}");
        Err(CliError::Failed("verification failed".into()))
    }
}
