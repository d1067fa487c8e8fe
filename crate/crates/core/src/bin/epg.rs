//! Command-line front end. Every command prints one JSON object on stdout;
//! diagnostics go to stderr.
//!
//! Exit codes: 0 ok, 1 negative verdict, 2 usage error, 3 input error,
//! 4 internal invariant failure.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use epg::b2m::{build_b2m, build_sun_b2m};
use epg::cactus::{build_b0_cactus, build_b1m_cactus, classify_cactus, decompose_cactus};
use epg::embedding::test_outerplanar;
use epg::graph::{gen_named, gen_random, parse_graph, Graph, Named, RandomFamily};
use epg::grid::{render, verify, EpgRepresentation, RenderFormat};
use epg::maxouter::{almost_dual, build_b0, build_b1, classify, compute_assignment, is_maximal_outerplanar};
use epg::oracle::{bend_number_exact, bounded_grid_search, default_bound, is_interval, SearchStatus, DEFAULT_BUDGET};

#[derive(Parser)]
#[command(name = "epg", version, about = "EPG representations of outerplanar graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Bend number and monotonic bend number, with an obstruction if any.
    Classify {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Family::Auto)]
        family: Family,
    },
    /// Construct a representation.
    Build {
        graph: PathBuf,
        #[arg(long, value_enum)]
        class: Class,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a representation against a graph.
    Verify {
        graph: PathBuf,
        rep: PathBuf,
        #[arg(long)]
        max_bends: Option<usize>,
        #[arg(long)]
        monotonic: bool,
    },
    /// Draw a representation.
    Render {
        rep: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Svg)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write a named or random graph.
    Gen {
        #[arg(long, value_enum)]
        family: GenFamily,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exhaustive searches for small graphs.
    Oracle {
        #[arg(value_enum)]
        mode: OracleMode,
        graph: PathBuf,
        /// Largest coordinate allowed after compaction.
        #[arg(long)]
        grid: Option<usize>,
        /// Node budget per search.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Auto,
    MaximalOuterplanar,
    Cactus,
    Outerplanar,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Class {
    B0,
    B1,
    B1m,
    B2m,
    Min,
    MinMonotonic,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Svg,
    Ascii,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenFamily {
    Nsun,
    Cycle,
    Path,
    M1,
    M1l,
    M2,
    M3,
    RandMaxout,
    RandCactus,
    RandOuterplanar,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleMode {
    B0,
    B1,
    B1m,
    Exact,
}

/// A failed command: exit code and message for stderr.
struct Fail(u8, String);

fn usage(msg: impl Into<String>) -> Fail {
    Fail(2, msg.into())
}

fn input(msg: impl Into<String>) -> Fail {
    Fail(3, msg.into())
}

fn internal(msg: impl Into<String>) -> Fail {
    Fail(4, msg.into())
}

/// Printed JSON plus the exit code it goes with.
struct Done(Value, u8);

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.cmd) {
        Ok(Done(v, code)) => {
            println!("{v}");
            ExitCode::from(code)
        }
        Err(Fail(code, msg)) => {
            eprintln!("epg: {msg}");
            println!("{}", json!({ "error": msg }));
            ExitCode::from(code)
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph, Fail> {
    let text = std::fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn read_rep(path: &Path) -> Result<EpgRepresentation, Fail> {
    let text = std::fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
    EpgRepresentation::from_json(&text).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn write_out(path: &Path, text: &str) -> Result<(), Fail> {
    std::fs::write(path, text).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn rep_value(rep: &EpgRepresentation) -> Value {
    serde_json::from_str(&rep.to_json()).expect("representation JSON")
}

fn run(cmd: Cmd) -> Result<Done, Fail> {
    match cmd {
        Cmd::Classify { graph, family } => cmd_classify(&read_graph(&graph)?, family),
        Cmd::Build { graph, class, output } => cmd_build(&read_graph(&graph)?, class, output.as_deref()),
        Cmd::Verify { graph, rep, max_bends, monotonic } => {
            let report = verify(&read_graph(&graph)?, &read_rep(&rep)?, max_bends, monotonic);
            let code = if report.pass { 0 } else { 1 };
            Ok(Done(serde_json::to_value(report).expect("report JSON"), code))
        }
        Cmd::Render { rep, format, output } => {
            let rep = read_rep(&rep)?;
            let format = match format {
                Format::Svg => RenderFormat::Svg,
                Format::Ascii => RenderFormat::Ascii,
            };
            let text = render(&rep, format);
            match output {
                Some(p) => {
                    write_out(&p, &text)?;
                    Ok(Done(json!({ "output": p, "bytes": text.len() }), 0))
                }
                None => Ok(Done(json!({ "rendering": text }), 0)),
            }
        }
        Cmd::Gen { family, n, l, seed, output } => cmd_gen(family, n, l, seed, output.as_deref()),
        Cmd::Oracle { mode, graph, grid, budget } => cmd_oracle(&read_graph(&graph)?, mode, grid, budget),
    }
}

fn detect(g: &Graph) -> Option<Family> {
    if is_maximal_outerplanar(g) {
        Some(Family::MaximalOuterplanar)
    } else if decompose_cactus(g).is_ok() {
        Some(Family::Cactus)
    } else if test_outerplanar(g).is_ok() {
        Some(Family::Outerplanar)
    } else {
        None
    }
}

fn cmd_classify(g: &Graph, family: Family) -> Result<Done, Fail> {
    let family = match family {
        Family::Auto => detect(g).ok_or_else(|| Fail(1, "graph is not outerplanar".into()))?,
        f => f,
    };
    match family {
        Family::MaximalOuterplanar => {
            let c = classify(g).map_err(|e| Fail(1, e.to_string()))?;
            let mut v = json!({ "family": "maximal-outerplanar", "b": c.b, "bm": c.bm });
            if let Some(o) = c.obstruction {
                v["obstruction"] = serde_json::to_value(o).expect("obstruction JSON");
            }
            Ok(Done(v, 0))
        }
        Family::Cactus => {
            let c = classify_cactus(g).map_err(|e| Fail(1, e.to_string()))?;
            let mut v = json!({ "family": "cactus", "b": c.b, "bm": c.bm });
            if let Some(o) = c.obstruction {
                v["obstruction"] = serde_json::to_value(o).expect("obstruction JSON");
            }
            Ok(Done(v, 0))
        }
        Family::Outerplanar => {
            test_outerplanar(g).map_err(|e| Fail(1, e.to_string()))?;
            let mut v = json!({ "family": "outerplanar", "bounds": { "b": 2, "bm": 2 } });
            if let Ok(interval) = is_interval(g) {
                v["interval"] = json!(interval);
                if interval {
                    v["b"] = json!(0);
                    v["bm"] = json!(0);
                }
            }
            Ok(Done(v, 0))
        }
        Family::Auto => unreachable!(),
    }
}

/// Representation for `class`, or a negative verdict when the graph is not
/// in the class or no construction for its family is available.
fn construct(g: &Graph, class: Class) -> Result<(EpgRepresentation, usize, bool), Fail> {
    let no = |msg: String| Fail(1, msg);
    if class == Class::B2m {
        if let Some(rep) = build_sun_b2m(g) {
            return Ok((rep, 2, true));
        }
    }
    let family = detect(g).ok_or_else(|| no("graph is not outerplanar".into()))?;
    let b2m = || build_b2m(g).map(|r| (r, 2, true)).map_err(|e| no(e.to_string()));
    match (class, family) {
        (Class::B2m, _) => b2m(),
        (Class::B0, Family::MaximalOuterplanar) => {
            let emb = test_outerplanar(g).map_err(|e| no(e.to_string()))?;
            let dual = almost_dual(g, &emb).map_err(|e| no(e.to_string()))?;
            build_b0(g, &dual).map(|r| (r, 0, true)).map_err(|e| no(e.to_string()))
        }
        (Class::B1, Family::MaximalOuterplanar) => {
            let emb = test_outerplanar(g).map_err(|e| no(e.to_string()))?;
            let dual = almost_dual(g, &emb).map_err(|e| no(e.to_string()))?;
            let asg = compute_assignment(g, &dual).map_err(|e| no(e.to_string()))?;
            build_b1(g, &dual, &asg).map(|r| (r, 1, false)).map_err(|e| no(e.to_string()))
        }
        (Class::B1m | Class::Min | Class::MinMonotonic, Family::MaximalOuterplanar) => {
            let c = classify(g).map_err(|e| no(e.to_string()))?;
            match class {
                Class::B1m if c.bm > 1 => Err(no(format!("not in B1m: monotonic bend number is {}", c.bm))),
                Class::MinMonotonic if c.bm != c.b => b2m(),
                _ => Ok((c.representation, c.b as usize, c.b == 0)),
            }
        }
        (_, Family::Cactus) => {
            let dec = decompose_cactus(g).map_err(|e| no(e.to_string()))?;
            match class {
                Class::B0 => build_b0_cactus(g, &dec).map(|r| (r, 0, true)).map_err(|e| no(e.to_string())),
                Class::Min | Class::MinMonotonic => {
                    let c = classify_cactus(g).map_err(|e| no(e.to_string()))?;
                    Ok((c.representation, c.b as usize, true))
                }
                _ => build_b1m_cactus(g, &dec).map(|r| (r, 1, true)).map_err(|e| no(e.to_string())),
            }
        }
        (Class::Min | Class::MinMonotonic, _) => b2m(),
        (_, _) => Err(no("construction needs a maximal outerplanar graph or a cactus".into())),
    }
}

fn cmd_build(g: &Graph, class: Class, output: Option<&Path>) -> Result<Done, Fail> {
    let (rep, k, monotonic) = construct(g, class)?;
    let report = verify(g, &rep, Some(k), monotonic);
    if !report.pass {
        return Err(internal(format!("constructed representation fails verification: {report:?}")));
    }
    let mut v = json!({ "max_bends": k, "monotonic": monotonic, "bends_used": rep.max_bends() });
    match output {
        Some(p) => {
            write_out(p, &rep.to_json())?;
            v["output"] = json!(p);
        }
        None => v["representation"] = rep_value(&rep),
    }
    Ok(Done(v, 0))
}

fn cmd_gen(family: GenFamily, n: Option<usize>, l: Option<usize>, seed: u64, output: Option<&Path>) -> Result<Done, Fail> {
    let need_n = || n.ok_or_else(|| usage("--n is required for this family"));
    let g = match family {
        GenFamily::Nsun => gen_named(Named::NSun(need_n()?)),
        GenFamily::Cycle => gen_named(Named::Cycle(need_n()?)),
        GenFamily::Path => gen_named(Named::Path(need_n()?)),
        GenFamily::M1 => gen_named(Named::M1),
        GenFamily::M1l => gen_named(Named::M1Ell(l.ok_or_else(|| usage("--l is required for m1l"))?)),
        GenFamily::M2 => gen_named(Named::M2),
        GenFamily::M3 => gen_named(Named::M3),
        GenFamily::RandMaxout => gen_random(RandomFamily::MaximalOuterplanar, need_n()?, seed),
        GenFamily::RandCactus => gen_random(RandomFamily::Cactus, need_n()?, seed),
        GenFamily::RandOuterplanar => gen_random(RandomFamily::ConnectedOuterplanar, need_n()?, seed),
    }
    .map_err(|e| usage(e.to_string()))?;
    let text = g.to_edge_list();
    let mut v = json!({ "n": g.n(), "m": g.m() });
    match output {
        Some(p) => {
            write_out(p, &text)?;
            v["output"] = json!(p);
        }
        None => v["graph"] = json!(text),
    }
    Ok(Done(v, 0))
}

fn cmd_oracle(g: &Graph, mode: OracleMode, grid: Option<usize>, budget: u64) -> Result<Done, Fail> {
    let (k, monotonic) = match mode {
        OracleMode::B0 => (0, false),
        OracleMode::B1 => (1, false),
        OracleMode::B1m => (1, true),
        OracleMode::Exact => {
            let e = bend_number_exact(g, budget);
            let code = if e.b.is_some() && e.bm.is_some() { 0 } else { 1 };
            return Ok(Done(serde_json::to_value(e).expect("exact JSON"), code));
        }
    };
    let bound = grid.unwrap_or_else(|| default_bound(g.n(), k));
    let out = bounded_grid_search(g, k, monotonic, bound, budget);
    let mut v = serde_json::to_value(&out).expect("outcome JSON");
    if let Some(rep) = &out.rep {
        if !verify(g, rep, Some(k), monotonic).pass {
            return Err(internal("search returned a representation that fails verification"));
        }
        v["representation"] = rep_value(rep);
    }
    let code = if out.status == SearchStatus::Found { 0 } else { 1 };
    Ok(Done(v, code))
}
