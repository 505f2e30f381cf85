use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use systolic::checkers::{classify, ClassifyOptions, PendantRule};
use systolic::generate::{corpus, generate, CorpusName};
use systolic::helly::{helly_point, Budgets, HellyCertificate, HellyInput, HellyOutcome, HellyWitness};
use systolic::io;
use systolic::sperner::{
    count_rainbow, coloring_defect, find_rainbow, random_admissible, subdivided_tetrahedron, Ball3, DualStructure,
};
use systolic::{verify, Complex, Error, Vertex};

#[derive(Parser)]
#[command(name = "systolic", version, about = "Simplicial complex checks and certified four-set Helly points")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify a complex: flagness, local largeness, SD2*, simple connectivity.
    Check {
        file: PathBuf,
        /// Tietze move budget for the simple-connectivity test.
        #[arg(long, default_value_t = 10_000)]
        effort: usize,
        /// Accept any two rim vertices as the attachment of a pendant triangle.
        #[arg(long)]
        loose_pendant: bool,
        /// Print `key=value` lines.
        #[arg(long)]
        machine: bool,
    },
    /// Write a named complex, e.g. `gen tri_grid 5 5` or `gen cone cycle 5`.
    Gen {
        #[arg(required_unless_present = "list", num_args = 1..)]
        name: Vec<String>,
        /// Print the names of the regression corpus instead.
        #[arg(long)]
        list: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Find v_i in A_i spanning a simplex of X.
    Helly {
        x: PathBuf,
        #[arg(num_args = 4, required = true)]
        a: Vec<PathBuf>,
        #[command(flatten)]
        budgets: BudgetArgs,
        /// Directory receiving the sphere, ball, map, dual structure and coloring.
        #[arg(long)]
        witness: Option<PathBuf>,
        #[arg(long)]
        machine: bool,
    },
    /// Validate a coloring of a ball and look for rainbow tetrahedra.
    Sperner {
        /// Use the tetrahedron boundary subdivided this many times.
        #[arg(long, conflicts_with_all = ["ball", "dual"])]
        subdivided: Option<usize>,
        #[arg(long, requires = "dual")]
        ball: Option<PathBuf>,
        #[arg(long, requires = "ball")]
        dual: Option<PathBuf>,
        /// Coloring to check; without it a random admissible coloring is drawn.
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the coloring used here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a certificate against X and the four sets.
    Verify {
        x: PathBuf,
        #[arg(num_args = 4, required = true)]
        a: Vec<PathBuf>,
        #[arg(long)]
        cert: PathBuf,
        /// Also re-check a witness directory written by `helly --witness`.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
}

#[derive(Args)]
struct BudgetArgs {
    /// Triangles per disc filling.
    #[arg(long, default_value_t = 2000)]
    max_area: usize,
    /// Search states per disc filling.
    #[arg(long, default_value_t = 200_000)]
    disc_budget: usize,
    /// Search states for the ball filling.
    #[arg(long, default_value_t = 50_000)]
    ball_budget: usize,
    /// Wall-clock limit in seconds.
    #[arg(long)]
    time_limit: Option<f64>,
}

const EXIT_INPUT: u8 = 1;
const EXIT_HYPOTHESIS: u8 = 2;
const EXIT_BUDGET: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("systolic: {e}");
            ExitCode::from(match e {
                Error::Hypothesis(_) => EXIT_HYPOTHESIS,
                _ => EXIT_INPUT,
            })
        }
    }
}

fn emit(out: Option<&Path>, text: &str) -> systolic::Result<()> {
    match out {
        Some(p) => Ok(fs::write(p, text)?),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_sets(x: &Complex, paths: &[PathBuf]) -> systolic::Result<[Complex; 4]> {
    let mut sets = Vec::with_capacity(4);
    for p in paths {
        let text = io::read_to_string(p)?;
        sets.push(io::parse_subcomplex(&text, x).map_err(|e| Error::Input(format!("{}: {e}", p.display())))?);
    }
    sets.try_into().map_err(|_| Error::Input("exactly four sets are needed".into()))
}

fn run(cmd: Cmd) -> systolic::Result<u8> {
    match cmd {
        Cmd::Check { file, effort, loose_pendant, machine } => {
            let x = io::load_complex(&file)?;
            let pendant = if loose_pendant { PendantRule::AnyTwo } else { PendantRule::Triangle };
            let report = classify(&x, &ClassifyOptions { effort, pendant })?;
            if machine {
                print!("{}", report.machine_record());
            } else {
                print!("{report}");
            }
            Ok(0)
        }
        Cmd::Gen { name, list, out } => {
            if list {
                let names: String = corpus().iter().map(|n| format!("{n}\n")).collect();
                emit(out.as_deref(), &names)?;
                return Ok(0);
            }
            let x = generate(&CorpusName::parse_tokens(&name)?)?;
            emit(out.as_deref(), &io::write_complex(&x))?;
            Ok(0)
        }
        Cmd::Helly { x, a, budgets, witness, machine } => {
            let x = io::load_complex(&x)?;
            let a = load_sets(&x, &a)?;
            let mut input = HellyInput::new(x, a);
            input.budgets = Budgets {
                max_area: budgets.max_area,
                disc_nodes: budgets.disc_budget,
                ball_nodes: budgets.ball_budget,
                time_limit: budgets.time_limit.map(Duration::from_secs_f64),
            };
            match helly_point(&input)? {
                HellyOutcome::Certificate(c) => {
                    if let (Some(dir), Some(w)) = (&witness, &c.witness) {
                        write_witness(dir, w)?;
                    }
                    if machine {
                        let v = c.simplex;
                        println!("outcome=certificate");
                        println!("simplex={} {} {} {}", v[0], v[1], v[2], v[3]);
                        println!("trivial={}", c.is_trivial());
                    } else {
                        print!("{}", certificate_text(&c));
                    }
                    Ok(0)
                }
                HellyOutcome::Unknown(s) => {
                    if machine {
                        println!("outcome=unknown");
                        println!("stage={}", s.stage);
                        println!("reason={}", s.reason);
                    } else {
                        println!("unknown: {} ({})", s.stage, s.reason);
                    }
                    Ok(EXIT_BUDGET)
                }
            }
        }
        Cmd::Sperner { subdivided, ball, dual, coloring, seed, out } => {
            let (b, d) = match (subdivided, ball, dual) {
                (Some(levels), _, _) => {
                    let inst = subdivided_tetrahedron(levels)?;
                    (inst.ball, inst.dual)
                }
                (None, Some(b), Some(d)) => {
                    (io::parse_ball(&io::read_to_string(b)?)?, io::parse_dual(&io::read_to_string(d)?)?)
                }
                _ => return Err(Error::Input("give --subdivided or both --ball and --dual".into())),
            };
            let c = match coloring {
                Some(p) => io::parse_coloring(&io::read_to_string(p)?)?,
                None => random_admissible(&b, &d, &mut ChaCha8Rng::seed_from_u64(seed)),
            };
            if let Some(p) = out {
                fs::write(p, io::write_coloring(&c))?;
            }
            if let Some(defect) = coloring_defect(&b, &d, &c)? {
                println!("invalid coloring: {defect}");
                return Ok(EXIT_INPUT);
            }
            match find_rainbow(&b, &c) {
                Some(t) => println!("rainbow {t}"),
                None => println!("rainbow none"),
            }
            println!("rainbow_count {}", count_rainbow(&b, &c));
            Ok(0)
        }
        Cmd::Verify { x, a, cert, witness } => {
            let x = io::load_complex(&x)?;
            let a = load_sets(&x, &a)?;
            let v = io::parse_certificate(&io::read_to_string(&cert)?)?;
            if let Err(why) = verify::certificate(&x, &a, &v) {
                println!("rejected: {why}");
                return Ok(EXIT_INPUT);
            }
            if let Some(dir) = witness {
                let w = read_witness(&dir)?;
                if let Err(why) = verify::witness(&x, &a, &v, &w) {
                    println!("rejected witness: {why}");
                    return Ok(EXIT_INPUT);
                }
            }
            println!("ok");
            Ok(0)
        }
    }
}

fn certificate_text(c: &HellyCertificate) -> String {
    let mut s = io::write_certificate(&c.simplex);
    if c.is_trivial() {
        s.push_str("# common vertex of all four sets\n");
    }
    s.push_str("# member i: whether v_i lies in A0 A1 A2 A3\n");
    for (i, row) in c.membership.iter().enumerate() {
        let flags: Vec<&str> = row.iter().map(|&m| if m { "1" } else { "0" }).collect();
        s.push_str(&format!("member {i} {}\n", flags.join(" ")));
    }
    s
}

const WITNESS_FILES: [&str; 6] = ["sphere.cx", "ball.txt", "phi.map", "dual.txt", "coloring.txt", "extra.map"];

fn write_witness(dir: &Path, w: &HellyWitness) -> systolic::Result<()> {
    fs::create_dir_all(dir)?;
    let extra: BTreeMap<Vertex, Vertex> = (0..4)
        .map(|l| (Vertex(l), w.z[l as usize]))
        .chain(w.rainbow.vertices().iter().enumerate().map(|(k, &v)| (Vertex(4 + k as u32), v)))
        .collect();
    let texts = [
        io::write_complex(&w.sphere),
        io::write_ball(&w.ball),
        io::write_vertex_map(&w.phi),
        io::write_dual(&w.dual),
        io::write_coloring(&w.coloring),
        format!("# m 0..3: triple points z_l; m 4..7: rainbow tetrahedron\n{}", io::write_vertex_map(&extra)),
    ];
    for (name, text) in WITNESS_FILES.iter().zip(texts) {
        fs::write(dir.join(name), text)?;
    }
    Ok(())
}

fn read_witness(dir: &Path) -> systolic::Result<HellyWitness> {
    let read = |k: usize| io::read_to_string(dir.join(WITNESS_FILES[k]));
    let sphere = io::parse_complex(&read(0)?)?;
    let ball: Ball3 = io::parse_ball(&read(1)?)?;
    let phi = io::parse_vertex_map(&read(2)?)?;
    let dual: DualStructure = io::parse_dual(&read(3)?)?;
    let coloring = io::parse_coloring(&read(4)?)?;
    let extra = io::parse_vertex_map(&read(5)?)?;
    let get = |k: u32| extra.get(&Vertex(k)).copied().ok_or_else(|| Error::Input(format!("extra.map lacks entry {k}")));
    let z = [get(0)?, get(1)?, get(2)?, get(3)?];
    let rainbow = systolic::Simplex::new(vec![get(4)?, get(5)?, get(6)?, get(7)?])?;
    Ok(HellyWitness { z, sphere, ball, phi, dual, coloring, rainbow })
}
