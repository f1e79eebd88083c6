use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hopfcomb::combinat::Limits;
use hopfcomb::registry::{self, Options, Rendered, VerifyMode};
use hopfcomb::Error;

/// Exact computation in combinatorial Hopf algebras.
#[derive(Parser, Debug)]
#[command(name = "hopfcomb", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest degree or enumeration size any command may touch. Overrides
    /// HOPFCOMB_MAX_DEGREE; the default is 8.
    #[arg(long, global = true)]
    limit: Option<usize>,
    /// Evaluate q at this integer in q-deformed algebras.
    #[arg(long, global = true, allow_negative_numbers = true)]
    q: Option<i64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct Target {
    /// Algebra id, e.g. eqsym, sgqsym, phisym, cpqsym, fqsym-q.
    #[arg(long)]
    algebra: String,
    /// Basis name; defaults to the first registered basis of the algebra.
    #[arg(long)]
    basis: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Product of elements, left to right.
    Product {
        #[command(flatten)]
        target: Target,
        #[arg(required = true)]
        elements: Vec<String>,
    },
    /// Coproduct of an element; several elements give the product of their
    /// coproducts in the (twisted) tensor square.
    Coproduct {
        #[command(flatten)]
        target: Target,
        #[arg(required = true)]
        elements: Vec<String>,
    },
    /// Pairing of two elements written in one basis with its dual basis.
    Pair {
        #[command(flatten)]
        target: Target,
        x: String,
        y: String,
    },
    /// Change of basis, embedding or quotient map.
    Convert {
        /// Algebra id, or `sym` for classical symmetric functions.
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value = "")]
        from: String,
        #[arg(long)]
        to: String,
        element: String,
    },
    /// Terms of an integer sequence.
    Count {
        #[arg(long)]
        family: String,
        n: usize,
        /// Print every term up to `n`.
        #[arg(long)]
        prefix: bool,
    },
    /// Stalactic insertion, or q-rewriting with `--system qS|qH`.
    Insert {
        word: String,
        #[arg(long)]
        system: Option<String>,
    },
    /// Exhaustive checks up to a degree.
    Verify {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        /// Check duality with the dual basis instead of the axioms.
        #[arg(long, conflicts_with = "oracle")]
        dual: bool,
        /// Compare products with a brute-force realization.
        #[arg(long)]
        oracle: bool,
        /// Number of variables of the realization.
        #[arg(long, requires = "oracle")]
        truncation: Option<usize>,
    },
    /// Rows of a class-count triangle.
    Triangle { name: String, rows: usize },
    /// Stalactic monoid commands.
    Stalactic {
        #[command(subcommand)]
        cmd: StalacticCmd,
    },
    /// Operations on the underlying combinatorial objects.
    Combinat {
        /// One of std, shifted-concat, cut, cycles, csupp, shifted-shuffle,
        /// cstd, cyclic-shuffle, matchings, matching-product, mw-words,
        /// closure.
        op: String,
        args: Vec<String>,
    },
    /// Basis labels of one degree.
    Basis {
        #[command(flatten)]
        target: Target,
        n: usize,
    },
    /// Registered algebras and bases.
    List,
}

#[derive(Subcommand, Debug)]
enum StalacticCmd {
    Insert { word: String },
    Count { family: String, n: usize },
    Triangle { name: String, rows: usize },
}

fn limits(flag: Option<usize>) -> Result<Limits, Error> {
    let from_env = match std::env::var("HOPFCOMB_MAX_DEGREE") {
        Ok(v) => Some(v.trim().parse::<usize>().map_err(|_| Error::Parse(format!("HOPFCOMB_MAX_DEGREE=`{v}`")))?),
        Err(_) => None,
    };
    Ok(match flag.or(from_env) {
        Some(d) => Limits::with_max_degree(d),
        None => Limits::default(),
    })
}

fn algebra_list() -> String {
    let mut out = String::from("registered algebras (basis):\n");
    for (a, b) in registry::algebras() {
        out.push_str(&format!("  {a} ({b})\n"));
    }
    out
}

enum Outcome {
    Done(Rendered),
    Verified(registry::Verification),
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let opts = Options {
        q: cli.q,
        limits: limits(cli.limit)?,
    };
    let find = |t: &Target| registry::lookup(&t.algebra, t.basis.as_deref(), cli.q);
    let done = match &cli.cmd {
        Cmd::Product { target, elements } => {
            let args: Vec<&str> = elements.iter().map(String::as_str).collect();
            find(target)?.product(&args, &opts)?
        }
        Cmd::Coproduct { target, elements } => {
            let args: Vec<&str> = elements.iter().map(String::as_str).collect();
            find(target)?.coproduct(&args, &opts)?
        }
        Cmd::Pair { target, x, y } => find(target)?.pair(x, y, &opts)?,
        Cmd::Convert {
            algebra,
            from,
            to,
            element,
        } => registry::convert(algebra, from, to, element, &opts)?,
        Cmd::Count { family, n, prefix } => registry::count(family, *n, *prefix, &opts)?,
        Cmd::Insert { word, system } => registry::insert(word, system.as_deref())?,
        Cmd::Triangle { name, rows } => registry::triangle(name, *rows, &opts)?,
        Cmd::Stalactic { cmd } => match cmd {
            StalacticCmd::Insert { word } => registry::insert(word, None)?,
            StalacticCmd::Count { family, n } => registry::count(family, *n, false, &opts)?,
            StalacticCmd::Triangle { name, rows } => registry::triangle(name, *rows, &opts)?,
        },
        Cmd::Verify {
            target,
            max_degree,
            dual,
            oracle,
            truncation,
        } => {
            let mode = if *dual {
                VerifyMode::Dual
            } else if *oracle {
                VerifyMode::Oracle {
                    truncation: *truncation,
                }
            } else {
                VerifyMode::Axioms
            };
            let v = registry::verify(&target.algebra, target.basis.as_deref(), *max_degree, mode, &opts)?;
            return Ok(Outcome::Verified(v));
        }
        Cmd::Combinat { op, args } => {
            let args: Vec<&str> = args.iter().map(String::as_str).collect();
            registry::combinat(op, &args, &opts)?
        }
        Cmd::Basis { target, n } => {
            let labels = find(target)?.basis(*n, &opts)?;
            Rendered {
                text: labels.join(" "),
                json: labels.into(),
            }
        }
        Cmd::List => Rendered {
            text: algebra_list().trim_end().to_string(),
            json: registry::algebras()
                .into_iter()
                .map(|(a, b)| serde_json::json!({"algebra": a, "basis": b}))
                .collect(),
        },
    };
    Ok(Outcome::Done(done))
}

fn emit(r: &Rendered, format: Format) {
    let body = match format {
        Format::Text => r.text.clone(),
        Format::Json => serde_json::to_string_pretty(&r.json).expect("JSON values serialize"),
    };
    // a closed pipe (e.g. `| head`) is not an error worth a panic
    let _ = writeln!(std::io::stdout(), "{body}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Done(r)) => {
            emit(&r, cli.format);
            ExitCode::SUCCESS
        }
        Ok(Outcome::Verified(v)) => {
            emit(&v.out, cli.format);
            if v.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            if matches!(e, Error::Unknown { kind: "algebra" | "basis", .. }) {
                eprint!("{}", algebra_list());
            }
            ExitCode::from(2)
        }
    }
}
