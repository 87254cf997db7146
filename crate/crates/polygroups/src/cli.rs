//! Command-line front end. All commands write their reports to the supplied
//! writer so tests can capture output byte for byte; exit codes are 0 for
//! success / property true, 1 for property false (witness on stdout), 2 for
//! parse, validation or budget errors (message on stderr).

use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use crate::classify;
use crate::error::{Error, Result};
use crate::hosszu;
use crate::io;
use crate::iso;
use crate::polyadic::{self, Method, NaryGroup, NaryOp, Verdict};
use crate::terms::{self, Family, Independence, TermAlgebra};
use crate::Config;

#[derive(Parser)]
#[command(name = "polygroups", version, about = "Finite n-ary groups: verification, Hosszu-Gluskin decomposition, classification")]
struct Cli {
    /// Seed for randomized audits.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Cell budget for materializing dense tables.
    #[arg(long, global = true)]
    dense_budget: Option<u128>,
    /// Work budget for exhaustive axiom checks.
    #[arg(long, global = true)]
    check_budget: Option<u128>,
    /// Work budget for term enumeration and independence scans.
    #[arg(long, global = true)]
    term_budget: Option<u128>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Full,
    Sokolov,
    Dornte,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    M,
    G,
}

#[derive(Subcommand)]
enum Command {
    /// Check the n-ary group axioms of an operation or algebra file.
    Verify {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Full)]
        method: MethodArg,
        /// Dornte identity position i (method dornte only).
        #[arg(long, default_value_t = 2)]
        i: usize,
        /// Dornte identity position j (method dornte only).
        #[arg(long, default_value_t = 2)]
        j: usize,
    },
    /// Certify a Hosszu-Gluskin triple and build the derived n-ary group.
    Construct {
        #[arg(long)]
        hg: PathBuf,
        /// Also write the dense operation table to this path.
        #[arg(long)]
        dense_out: Option<PathBuf>,
    },
    /// Recover the Hosszu-Gluskin data of an n-ary group at an anchor.
    Decompose {
        file: PathBuf,
        #[arg(long)]
        at: usize,
        /// Decompose into an m-ary algebra instead of a binary one.
        #[arg(long, value_name = "M")]
        k_ary: Option<usize>,
    },
    /// Report the skew map, the hat map and iterated-skew exponents.
    Skew { file: PathBuf },
    /// Materialize the m-ary retract at the given anchors.
    Retract {
        file: PathBuf,
        /// Comma-separated anchor elements a, a2, ...
        #[arg(long, value_delimiter = ',')]
        at: Vec<usize>,
        #[arg(long)]
        arity: usize,
    },
    /// Search for an isomorphism between two n-ary groups.
    Iso {
        file1: PathBuf,
        file2: PathBuf,
        /// Cross-check against the brute-force search.
        #[arg(long)]
        oracle: bool,
    },
    /// Classify all n-ary groups on k elements up to isomorphism.
    Enumerate {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        /// Compare the counts against the published tables.
        #[arg(long)]
        table_check: bool,
        /// Worker threads for the candidate sweep.
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Classify the n-ary groups over the Klein four-group.
    Klein {
        #[arg(long)]
        n: usize,
    },
    /// Decide M- or G-independence of a set of elements.
    Independence {
        #[arg(long)]
        hg: PathBuf,
        /// Comma-separated elements a1, a2, ...
        #[arg(long, value_delimiter = ',')]
        set: Vec<usize>,
        #[arg(long, value_enum)]
        family: FamilyArg,
    },
    /// Run the alternative group characterizations on an operation table.
    Characterize { file: PathBuf },
}

pub fn run_with_output(args: &[String], out: &mut dyn Write) -> i32 {
    let mut argv = vec!["polygroups".to_string()];
    argv.extend_from_slice(args);
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders --help/--version as "errors" with success status
            if e.use_stderr() {
                eprint!("{e}");
                return 2;
            }
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    let mut cfg = Config { seed: cli.seed, ..Config::default() };
    if let Some(b) = cli.dense_budget {
        cfg.dense_budget = b;
    }
    if let Some(b) = cli.check_budget {
        cfg.check_budget = b;
    }
    if let Some(b) = cli.term_budget {
        cfg.term_budget = b;
    }
    match dispatch(&cli.command, &cfg, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn read_file(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// Loads an operation from a `.hg` or `.nop` file, by extension.
fn load_op(path: &PathBuf, cfg: &Config) -> Result<NaryOp> {
    let text = read_file(path)?;
    match path.extension().and_then(|e| e.to_str()) {
        Some("hg") => Ok(NaryOp::hg_backed(Arc::new(io::parse_hg(&text)?))),
        Some("nop") => io::parse_nop(&text, cfg),
        _ => Err(Error::Parse(format!("{}: expected a .nop or .hg file", path.display()))),
    }
}

fn load_group(path: &PathBuf, cfg: &Config) -> Result<NaryGroup> {
    NaryGroup::certify(load_op(path, cfg)?, cfg)
}

fn map_line(prefix: &str, map: impl Iterator<Item = (usize, usize)>) -> String {
    let pairs: Vec<String> = map.map(|(x, y)| format!("{x}->{y}")).collect();
    format!("{prefix}: {}", pairs.join(" "))
}

fn dispatch(cmd: &Command, cfg: &Config, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Verify { file, method, i, j } => {
            let op = load_op(file, cfg)?;
            let method = match method {
                MethodArg::Full => Method::Full,
                MethodArg::Sokolov => Method::Sokolov,
                MethodArg::Dornte => Method::Dornte { i: *i, j: *j },
            };
            match polyadic::is_nary_group(&op, method, cfg)? {
                Verdict::Holds => {
                    let g = NaryGroup::certify(op, cfg)?;
                    let f = polyadic::predicates(&g);
                    let _ = writeln!(out, "verdict: holds");
                    let _ = writeln!(
                        out,
                        "commutative={} medial={} idempotent={}",
                        f.commutative as u8, f.semiabelian as u8, f.idempotent as u8
                    );
                    Ok(0)
                }
                Verdict::Fails(w) => {
                    let _ = writeln!(out, "verdict: fails {w:?}");
                    Ok(1)
                }
            }
        }
        Command::Construct { hg, dense_out } => {
            let algebra = io::parse_hg(&read_file(hg)?)?;
            let g = hosszu::construct(algebra, cfg)?;
            let _ = writeln!(out, "arity {}", g.arity());
            let _ = writeln!(out, "order {}", g.order());
            let _ = writeln!(out, "{}", map_line("skew", g.skew_map().iter().copied().enumerate()));
            if let Some(path) = dense_out {
                let dense = g.op().to_dense(cfg)?;
                let text = io::write_nop(&dense, cfg)?;
                std::fs::write(path, text)
                    .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
                let _ = writeln!(out, "wrote {}", path.display());
            }
            Ok(0)
        }
        Command::Decompose { file, at, k_ary } => {
            let g = load_group(file, cfg)?;
            match k_ary {
                None => {
                    let algebra = hosszu::decompose(&g, *at)?;
                    let _ = write!(out, "{}", io::write_hg(&algebra));
                }
                Some(m) => {
                    let khg = hosszu::decompose_k(&g, *at, *m, cfg)?;
                    let _ = writeln!(out, "arity {}", khg.arity());
                    let _ = writeln!(out, "base_arity {}", khg.base().arity());
                    let _ = writeln!(out, "order {}", khg.base().order());
                    let phi: Vec<String> = khg.phi().iter().map(|v| v.to_string()).collect();
                    let bs: Vec<String> = khg.bs().iter().map(|v| v.to_string()).collect();
                    let _ = writeln!(out, "phi {}", phi.join(" "));
                    let _ = writeln!(out, "bs {}", bs.join(" "));
                }
            }
            Ok(0)
        }
        Command::Skew { file } => {
            let g = load_group(file, cfg)?;
            let k = g.order();
            let _ = writeln!(out, "{}", map_line("skew", g.skew_map().iter().copied().enumerate()));
            let _ = writeln!(out, "{}", map_line("hat", (0..k).map(|x| (x, g.hat_of(x)))));
            for m in 1..=3u32 {
                let exp = polyadic::skew_power_exponent(g.arity(), m);
                let ok = (0..k).all(|x| g.iterated_skew(x, m as usize) == g.nary_power(x, exp));
                let _ = writeln!(out, "skew_power m={m} exponent={exp} verified={}", ok as u8);
            }
            Ok(0)
        }
        Command::Retract { file, at, arity } => {
            let g = load_group(file, cfg)?;
            let r = polyadic::retract(&g, at, *arity, cfg)?;
            let dense = r.op().to_dense(cfg)?;
            let _ = write!(out, "{}", io::write_nop(&dense, cfg)?);
            Ok(0)
        }
        Command::Iso { file1, file2, oracle } => {
            let g1 = load_group(file1, cfg)?;
            let g2 = load_group(file2, cfg)?;
            let witness = iso::iso_retract(&g1, &g2, cfg)?;
            if *oracle {
                let brute = iso::iso_bruteforce(&g1, &g2, cfg)?;
                if witness.is_some() != brute.is_some() {
                    return Err(Error::Parse(
                        "oracle disagreement between retract and brute-force search".into(),
                    ));
                }
            }
            match witness {
                Some(w) => {
                    let _ = writeln!(out, "{}", map_line("h", w.map.iter().copied().enumerate()));
                    Ok(0)
                }
                None => {
                    let _ = writeln!(out, "none");
                    Ok(1)
                }
            }
        }
        Command::Enumerate { k, n, table_check, threads } => {
            let report = match threads {
                Some(t) => rayon::ThreadPoolBuilder::new()
                    .num_threads(*t)
                    .build()
                    .map_err(|e| Error::Parse(e.to_string()))?
                    .install(|| classify::enumerate(*k, *n, cfg))?,
                None => classify::enumerate(*k, *n, cfg)?,
            };
            let _ = write!(out, "{}", classify::report_text(&report));
            if *table_check {
                let diff = classify::verify_against_table(&report)?;
                for line in &diff {
                    let _ = writeln!(out, "table_mismatch {line}");
                }
                if !diff.is_empty() {
                    return Ok(1);
                }
            }
            Ok(0)
        }
        Command::Klein { n } => {
            let classes = classify::klein_classification(*n, cfg)?;
            for (i, rep) in classes.iter().enumerate() {
                let phi: Vec<String> = rep.hg.phi().map().iter().map(|v| v.to_string()).collect();
                let _ = writeln!(
                    out,
                    "class {i} group={} phi={} b={} commutative={} medial={} idempotent={}",
                    rep.group_label,
                    phi.join(","),
                    rep.hg.b(),
                    rep.flags.commutative as u8,
                    rep.flags.semiabelian as u8,
                    rep.flags.idempotent as u8,
                );
            }
            let _ = writeln!(out, "count {}", classes.len());
            Ok(0)
        }
        Command::Independence { hg, set, family } => {
            let algebra = TermAlgebra::new(io::parse_hg(&read_file(hg)?)?)?;
            let family = match family {
                FamilyArg::M => Family::M,
                FamilyArg::G => Family::G,
            };
            match terms::independent(&algebra, set, family, cfg)? {
                Independence::Independent => {
                    let _ = writeln!(out, "independent");
                    Ok(0)
                }
                Independence::Dependent(cert) => {
                    let _ = writeln!(out, "dependent");
                    let elems: Vec<String> = cert.elements.iter().map(|v| v.to_string()).collect();
                    let _ = writeln!(out, "elements {}", elems.join(","));
                    for (i, (part, value)) in cert.parts.iter().zip(&cert.values).enumerate() {
                        let coeffs: Vec<String> =
                            part.coeffs.iter().map(|v| v.to_string()).collect();
                        let _ = writeln!(out, "h{} coeffs={} value={value}", i + 1, coeffs.join(","));
                    }
                    let _ = writeln!(out, "k_h {}", cert.k_h);
                    Ok(1)
                }
            }
        }
        Command::Characterize { file } => {
            let op = load_op(file, cfg)?;
            let report = polyadic::check_characterizations(&op, cfg)?;
            let _ = writeln!(out, "semigroup={}", report.is_semigroup as u8);
            let _ = writeln!(out, "group={}", report.is_group as u8);
            let _ = writeln!(out, "sokolov={}", report.sokolov as u8);
            match report.neutral_sequences {
                Some(k) => {
                    let _ = writeln!(out, "neutral_sequences={k}");
                }
                None => {
                    let _ = writeln!(out, "neutral_sequences=none");
                }
            }
            match report.translations {
                Some((i, j)) => {
                    let _ = writeln!(out, "translations={i},{j}");
                }
                None => {
                    let _ = writeln!(out, "translations=none");
                }
            }
            let _ = writeln!(out, "tyutin={}", report.tyutin as u8);
            if report.is_group {
                let g = NaryGroup::certify(op, cfg)?;
                match hosszu::form19_check(&g, cfg) {
                    Ok(v) => {
                        let _ = writeln!(out, "form19={}", v as u8);
                    }
                    Err(Error::EvenArity) => {
                        let _ = writeln!(out, "form19=na");
                    }
                    Err(e) => return Err(e),
                }
                let mut found = None;
                for t in 1..=3 {
                    if let Some(a) = hosszu::k_exponential_check(&g, t, cfg)? {
                        found = Some((t, a));
                        break;
                    }
                }
                match found {
                    Some((t, a)) => {
                        let _ = writeln!(out, "exponential t={t} anchor={a}");
                    }
                    None => {
                        let _ = writeln!(out, "exponential none");
                    }
                }
                Ok(0)
            } else {
                Ok(1)
            }
        }
    }
}
