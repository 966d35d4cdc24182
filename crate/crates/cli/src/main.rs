use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use specht_core::repmod::{rep_matrix, CharacterTable};
use specht_core::shapes::{count_standard, shapes_of};
use specht_core::verify::{self, Suite, VerifyConfig};
use specht_core::words::orbit;
use specht_core::{Caps, Element, Flavor, Heart, Shape, SpechtMatrix};

/// Specht modules and representing matrices for symmetric, generalized
/// symmetric and hyperoctahedral groups.
#[derive(Debug, Parser)]
#[command(name = "specht", version, after_help = EXAMPLES)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

const EXAMPLES: &str = "Examples:
  specht shapes -n 5
  specht shapes -n 3 --flavor biword
  specht words --lambda 2,1,1
  specht specht --lambda 2,1,1
  specht specht --lambda 3,2 --heart
  specht rep --lambda 3,2 --element \"(1,2)\"
  specht rep --flavor rword -r 3 --lambda \"|3,2|\" --element t1
  specht rep --flavor biword --lambda \"|3,2\" --element \"t1 (1,2,3,4,5)\"
  specht chartable -n 3
  specht verify -n 4 --suite all
  specht verify -n 3 -r 2 --suite cross-r2

Shapes: \"3,2\" is a partition, \"2,1|2|1,1\" an r-multipartition (empty
components are empty strings), \"|3,2\" the bipartition (empty, (3,2)).
Elements: cycles \"(1,2)(3,4)\", one-line \"[2,1,4,3]\", phase factors \"t1^2 (1,2,3)\",
signed one-line \"[-2,3,1]\".";

#[derive(Debug, Args)]
struct Global {
    /// Word system: plain, rword or biword. Defaults to rword when -r > 1 is given, plain otherwise.
    #[arg(long, global = true)]
    flavor: Option<String>,
    /// Degree of the group.
    #[arg(short, global = true)]
    n: Option<usize>,
    /// Order of the roots of unity (rword only; biword means 2, plain means 1).
    #[arg(short, global = true)]
    r: Option<u32>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for randomized verification.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest group that may be enumerated.
    #[arg(long, global = true)]
    cap_group: Option<u128>,
    /// Largest word orbit that may be listed.
    #[arg(long, global = true)]
    cap_orbit: Option<u128>,
    /// Largest Specht matrix (rows times columns) that may be built.
    #[arg(long, global = true)]
    cap_matrix: Option<u128>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the shapes of size n with their dimensions f.
    Shapes,
    /// List the word orbit X_lambda.
    Words {
        #[arg(long)]
        lambda: String,
    },
    /// Print the Specht matrix M_lambda, or its heart with --heart.
    Specht {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        heart: bool,
    },
    /// Print the matrix of a group element on the Specht module.
    Rep {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        element: String,
    },
    /// Print the character table.
    Chartable,
    /// Run verification suites (comma-separated names or "all").
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Number of random element pairs for the homomorphism suite.
        #[arg(long, default_value_t = 100)]
        random_pairs: usize,
    },
}

impl Global {
    fn flavor(&self) -> anyhow::Result<Flavor> {
        match (self.flavor.as_deref(), self.r) {
            (None, None | Some(1)) => Ok(Flavor::Plain),
            (None, Some(r)) => Ok(Flavor::RWord(r)),
            (Some("rword"), None) => bail!("--flavor rword needs -r"),
            (Some("rword"), Some(r)) => Ok(Flavor::from_name("rword", r)?),
            (Some("plain"), Some(r)) if r != 1 => bail!("plain fixes r = 1"),
            (Some("biword"), Some(r)) if r != 2 => bail!("biword fixes r = 2"),
            (Some(name), _) => Ok(name.parse()?),
        }
    }

    fn n(&self) -> anyhow::Result<usize> {
        self.n.context("this command needs -n")
    }

    fn caps(&self) -> Caps {
        let d = Caps::default();
        Caps {
            group: self.cap_group.unwrap_or(d.group),
            orbit: self.cap_orbit.unwrap_or(d.orbit),
            matrix: self.cap_matrix.unwrap_or(d.matrix),
        }
    }
}

/// What a command produced: text or JSON for stdout, and whether it passed.
struct Output {
    text: String,
    json: Value,
    ok: bool,
}

fn factorial_label(n: usize, flavor: Flavor) -> String {
    match flavor.r() {
        1 => format!("{n}!"),
        r => format!("{r}^{n} * {n}!"),
    }
}

fn run(cli: &Cli) -> anyhow::Result<Output> {
    let g = &cli.global;
    let flavor = g.flavor()?;
    let caps = g.caps();
    let shape =
        |text: &str| Shape::parse(text, flavor).with_context(|| format!("bad shape {text:?}"));
    let out = match &cli.command {
        Command::Shapes => {
            let n = g.n()?;
            let shapes = shapes_of(n, flavor);
            let dims: Vec<u128> = shapes.iter().map(count_standard).collect();
            let mut text: String = shapes
                .iter()
                .zip(&dims)
                .map(|(s, f)| format!("{s}, f={f}\n"))
                .collect();
            let sum: u128 = dims.iter().map(|f| f * f).sum();
            if n > 0 {
                text.push_str(&format!(
                    "sum of squares: {sum} = {}\n",
                    factorial_label(n, flavor)
                ));
            }
            let json = json!({
                "flavor": flavor.to_string(),
                "n": n,
                "shapes": shapes.iter().zip(&dims).map(|(s, f)| json!({"shape": s.to_json(), "f": *f as u64})).collect::<Vec<_>>(),
                "sum_of_squares": sum as u64,
            });
            Output {
                text,
                json,
                ok: true,
            }
        }
        Command::Words { lambda } => {
            let s = shape(lambda)?;
            let words = orbit(&s, &caps)?;
            let text = words.iter().map(|w| format!("{w}\n")).collect();
            let json = json!({
                "flavor": flavor.to_string(),
                "lambda": s.to_json(),
                "words": words.iter().map(ToString::to_string).collect::<Vec<_>>(),
            });
            Output {
                text,
                json,
                ok: true,
            }
        }
        Command::Specht { lambda, heart } => {
            let s = shape(lambda)?;
            if *heart {
                let h = Heart::new(&s)?;
                Output {
                    text: h.to_text(),
                    json: h.to_json(),
                    ok: true,
                }
            } else {
                let m = SpechtMatrix::full(&s, &caps)?;
                Output {
                    text: m.to_text(),
                    json: m.to_json(),
                    ok: true,
                }
            }
        }
        Command::Rep { lambda, element } => {
            let s = shape(lambda)?;
            let e = Element::parse(element, s.size(), flavor)
                .with_context(|| format!("bad element {element:?}"))?;
            let m = rep_matrix(&s, &e)?;
            Output {
                text: format!("{}\n", m.to_string().trim_end()),
                json: m.to_json(),
                ok: true,
            }
        }
        Command::Chartable => {
            let t = CharacterTable::new(g.n()?, flavor, &caps)?;
            Output {
                text: t.to_text(),
                json: t.to_json(),
                ok: true,
            }
        }
        Command::Verify {
            suite,
            random_pairs,
        } => {
            let suites = Suite::parse_list(suite)?;
            let config = VerifyConfig {
                n: g.n()?,
                flavor,
                caps,
                seed: g.seed,
                random_pairs: *random_pairs,
            };
            let report = verify::run(&config, &suites)?;
            Output {
                text: report.to_text(),
                json: report.to_json(),
                ok: report.passed(),
            }
        }
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            match cli.global.format {
                Format::Text => print!("{}", out.text),
                Format::Json => println!("{}", out.json),
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("{}", out.json);
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("{}", json!({"error": format!("{e:#}")}));
            ExitCode::from(2)
        }
    }
}
