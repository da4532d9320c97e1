use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use basis_hc::bounds::{catalan_lower, hc_lower, hc_lower_corollary, uniform_lower, BoundValue};
use basis_hc::dot::export_dot;
use basis_hc::graphic::{GraphSpec, Multigraph};
use basis_hc::hamiltonian::{count_hc_through_edge, hc_star};
use basis_hc::harness::{replay, Campaign, CapPolicy, Family, Grid, Handle, Instance, Status};
use basis_hc::uniform::UniformSpec;
use basis_hc::witness::{WitnessPolicy, WitnessSet};
use basis_hc::{EdgeCycle, Error};

#[derive(Parser)]
#[command(name = "bgham", version, about = "Basis graphs, good 4-cycles and Hamiltonian cycles through an edge")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// graphic2, graphicK, catalan, gencat or uniform
    #[arg(long, global = true)]
    family: Option<String>,
    /// Family parameters, e.g. `complete(4)`, `@graph.json`, `3`, `NNENEE`, `2,5`
    #[arg(long, global = true)]
    params: Option<String>,
    /// A basis-graph edge as `u,v`
    #[arg(long, global = true)]
    edge: Option<String>,
    /// Stop counting at this many cycles, or the witness target
    #[arg(long, global = true)]
    cap: Option<u64>,
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true)]
    dot: bool,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest graph order in a graphic campaign
    #[arg(long, global = true)]
    n_max: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// List the bases
    Bases,
    /// Print the basis graph
    Bg,
    /// Template good cycles through an edge
    GoodCycles,
    /// Count Hamiltonian cycles through an edge, or HC* without --edge
    CountHc,
    /// Build a witness set for an edge
    Witness,
    /// Evaluate a lower bound
    Bounds,
    /// Run a verification campaign
    Verify {
        /// Sample this many edges per instance
        #[arg(long)]
        sample: Option<usize>,
        /// Only count exactly; refuse what needs capping
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        no_witnesses: bool,
    },
    /// Write the instance (or its basis graph with --dot)
    Export,
    /// Re-check an exported witness file
    CheckWitness { file: String },
    /// Re-check one record of a report
    Replay { file: String },
}

fn usage(msg: impl Into<String>) -> Error {
    Error::BadParams(msg.into())
}

fn nums(s: &str) -> Result<Vec<usize>, Error> {
    s.split(',')
        .map(|x| x.trim().parse().map_err(|_| usage(format!("`{x}` is not a number in `{s}`"))))
        .collect()
}

fn family(cli: &Cli) -> Result<Family, Error> {
    cli.family
        .as_deref()
        .ok_or_else(|| usage("--family is required (graphic2, graphicK, catalan, gencat, uniform)"))?
        .parse()
}

fn instance(cli: &Cli) -> Result<Instance, Error> {
    let fam = family(cli)?;
    let p = cli
        .params
        .as_deref()
        .ok_or_else(|| usage("--params is required, e.g. `complete(4)`, `3`, `NNENEE` or `2,5`"))?;
    Ok(match fam {
        Family::Graphic2 | Family::GraphicK => {
            let graph = match p.strip_prefix('@') {
                Some(path) => {
                    let text = fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))?;
                    let v: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
                    Multigraph::from_json(v.get("graph").unwrap_or(&v))?
                }
                None => p.parse::<GraphSpec>()?.build()?,
            };
            let k = if fam == Family::Graphic2 { 2 } else { graph.edge_connectivity() };
            Instance::Graphic { graph, k }
        }
        Family::Catalan => match nums(p)?.as_slice() {
            [k] => Instance::Catalan(*k),
            _ => return Err(usage("catalan takes one parameter k")),
        },
        Family::Gencat => Instance::Gencat(p.parse()?),
        Family::Uniform => match nums(p)?.as_slice() {
            [r, n] => Instance::Uniform(UniformSpec::new(*r, *n)?),
            _ => return Err(usage("uniform takes r,n")),
        },
    })
}

fn edge(cli: &Cli, h: &Handle) -> Result<(usize, usize), Error> {
    let s = cli.edge.as_deref().ok_or_else(|| usage("--edge u,v is required"))?;
    match nums(s)?.as_slice() {
        [u, v] => {
            if !h.basis_graph().has_edge(*u, *v) {
                return Err(Error::NotAnEdge(*u, *v));
            }
            Ok((*u, *v))
        }
        _ => Err(usage("--edge takes two basis indices u,v")),
    }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("JSON serializes"));
}

fn bound(cli: &Cli) -> Result<(Vec<usize>, BoundValue, Option<BoundValue>), Error> {
    let fam = family(cli)?;
    let p = nums(cli.params.as_deref().ok_or_else(|| usage("--params is required"))?)?;
    let v = match (fam, p.as_slice()) {
        (Family::Graphic2, [n]) => hc_lower(*n, 2)?,
        (Family::GraphicK, [n, k]) => hc_lower(*n, *k)?,
        (Family::Catalan, [k]) => catalan_lower(*k)?,
        (Family::Uniform, [r, n]) => uniform_lower(*r, *n)?,
        _ => return Err(usage("bounds: graphic2 takes n, graphicK n,k, catalan k, uniform r,n")),
    };
    let corollary = match (fam, p.as_slice()) {
        (Family::GraphicK, [n, k]) if n > k && *k >= 5 => Some(hc_lower_corollary(*n, *k)?),
        _ => None,
    };
    Ok((p, v, corollary))
}

fn campaign(cli: &Cli, sample: Option<usize>, exact: bool, no_witnesses: bool) -> Result<Campaign, Error> {
    let fam = family(cli)?;
    let p = cli.params.as_deref();
    let grid = match fam {
        Family::Graphic2 | Family::GraphicK => {
            let k = if fam == Family::Graphic2 { 2 } else { p.map(nums).transpose()?.and_then(|v| v.first().copied()).unwrap_or(3) };
            let n_max = cli.n_max.unwrap_or(5);
            Grid::GraphicPool { n_min: 3, n_max, m_max: 8, k }
        }
        Family::Catalan => Grid::Catalan { ks: p.map(nums).transpose()?.unwrap_or(vec![2, 3]) },
        Family::Gencat => match p.map(nums).transpose()?.as_deref() {
            None => Grid::Gencat { len_min: 4, len_max: 8, max_bases: 42 },
            Some([a, b, c]) => Grid::Gencat { len_min: *a, len_max: *b, max_bases: *c },
            Some(_) => return Err(usage("gencat campaign takes len_min,len_max,max_bases")),
        },
        Family::Uniform => {
            let specs = match p {
                None => vec![(2, 4), (2, 5), (3, 5), (3, 6)],
                Some(s) => s
                    .split(';')
                    .map(|pair| match nums(pair)?.as_slice() {
                        [r, n] => Ok((*r, *n)),
                        _ => Err(usage("uniform campaign takes `r,n;r,n;...`")),
                    })
                    .collect::<Result<_, _>>()?,
            };
            Grid::Uniform { specs }
        }
    };
    let mut c = Campaign::new(fam, grid);
    c.seed = cli.seed;
    c.edges_per_instance = sample;
    c.witnesses = !no_witnesses;
    if exact {
        c.cap = CapPolicy::Exact;
    }
    Ok(c)
}

fn run(cli: &Cli) -> Result<bool, Error> {
    match &cli.command {
        Command::Bases => {
            let h = instance(cli)?.build()?;
            let fam = h.basis_graph().family();
            if cli.json {
                print_json(&fam.to_json());
            } else {
                for (i, b) in fam.bases().iter().enumerate() {
                    println!("{i}: {:?}", b.elements());
                }
            }
        }
        Command::Bg => {
            let h = instance(cli)?.build()?;
            let bg = h.basis_graph();
            if cli.dot {
                print!("{}", export_dot(bg, &[]));
            } else if cli.json {
                print_json(&json!({"vertices": bg.vertex_count(), "edges": bg.edges(), "bases": bg.family().to_json()}));
            } else {
                println!("{} vertices, {} edges", bg.vertex_count(), bg.edge_count());
                for v in 0..bg.vertex_count() {
                    println!("{v}: {:?}", bg.neighbors(v));
                }
            }
        }
        Command::GoodCycles => {
            let h = instance(cli)?.build()?;
            let (u, v) = edge(cli, &h)?;
            let cycles = h.good_cycles(u, v)?;
            if cli.dot {
                let hl: Vec<EdgeCycle> = cycles.iter().map(|c| c.edge_cycle()).collect();
                print!("{}", export_dot(h.basis_graph(), &hl));
            } else if cli.json {
                let list: Vec<Value> = cycles
                    .iter()
                    .map(|c| json!({"cycle": c.vertices(), "e": c.e, "g": c.g, "f": c.f, "w": c.w}))
                    .collect();
                print_json(&json!({"edge": [u, v], "count": cycles.len(), "good_cycles": list}));
            } else {
                println!("{} good cycles through ({u},{v})", cycles.len());
                for c in &cycles {
                    println!("{:?}  e={} g={} f={} w={}", c.vertices(), c.e, c.g, c.f, c.w);
                }
            }
        }
        Command::CountHc => {
            let h = instance(cli)?.build()?;
            let bg = h.basis_graph();
            let (label, count) = match cli.edge {
                Some(_) => {
                    let (u, v) = edge(cli, &h)?;
                    (json!([u, v]), count_hc_through_edge(bg, u, v, cli.cap)?)
                }
                None => (Value::Null, hc_star(bg, cli.cap, None)?),
            };
            if cli.json {
                print_json(&json!({"edge": label, "value": count.value, "capped": count.capped}));
            } else {
                let what = if label.is_null() { "HC*".to_string() } else { format!("HC through {label}") };
                println!("{what} = {}{}", if count.capped { ">= " } else { "" }, count.value);
            }
        }
        Command::Witness => {
            let inst = instance(cli)?;
            let h = inst.build()?;
            let e = edge(cli, &h)?;
            let target = cli.cap.unwrap_or(1) as usize;
            let w = h.witnesses(e, &WitnessPolicy::new(target))?;
            if cli.json {
                print_json(&json!({"instance": inst.to_json(), "witnesses": w.to_json()}));
            } else if cli.dot {
                print!("{}", export_dot(h.basis_graph(), &w.cycles));
            } else {
                println!("{} witnesses through {:?} ({:?}, {} collisions)", w.len(), e, w.method, w.collisions);
                for c in &w.cycles {
                    println!("{:?}", c.vertex_order(e.0, e.1).expect("witness holds its edge"));
                }
            }
        }
        Command::Bounds => {
            let (p, v, corollary) = bound(cli)?;
            if cli.json {
                match corollary {
                    Some(c) => print_json(&json!([v.to_json(&p), c.to_json(&p)])),
                    None => print_json(&v.to_json(&p)),
                }
            } else {
                println!("{v}");
                if let Some(c) = corollary {
                    println!("corollary: {c}");
                }
            }
        }
        Command::Verify { sample, exact, no_witnesses } => {
            let c = campaign(cli, *sample, *exact, *no_witnesses)?;
            let report = c.run()?;
            if cli.json {
                print_json(&report.to_json());
            } else {
                for r in report.failures() {
                    println!("FAIL {} edge {:?}: {}", r.instance, r.edge, serde_json::to_string(r).expect("record serializes"));
                }
                let s = report.summary();
                let verdict = if report.passed() { Status::Pass } else { Status::Fail };
                println!(
                    "{verdict}: {} records, {} pass, {} capped-pass, {} fail",
                    report.records.len(),
                    s.pass,
                    s.capped_pass,
                    s.fail
                );
            }
            return Ok(report.passed());
        }
        Command::Export => {
            let inst = instance(cli)?;
            if cli.dot {
                print!("{}", export_dot(inst.build()?.basis_graph(), &[]));
            } else {
                print_json(&inst.to_json());
            }
        }
        Command::CheckWitness { file } => {
            let text = fs::read_to_string(file).map_err(|e| usage(format!("{file}: {e}")))?;
            let v: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
            let inst = Instance::from_json(v.get("instance").ok_or_else(|| Error::Parse("missing `instance`".into()))?)?;
            let h = inst.build()?;
            let raw = v.get("witnesses").ok_or_else(|| Error::Parse("missing `witnesses`".into()))?;
            match WitnessSet::from_json(h.basis_graph(), raw) {
                Ok(w) => println!("PASS: {} distinct Hamiltonian cycles through {:?}", w.len(), w.edge),
                Err(e @ Error::Parse(_)) => return Err(e),
                Err(e) => {
                    println!("FAIL: {e}");
                    return Ok(false);
                }
            }
        }
        Command::Replay { file } => {
            let text = fs::read_to_string(file).map_err(|e| usage(format!("{file}: {e}")))?;
            let v: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
            let rec = replay(&v, CapPolicy::Auto)?;
            println!("{}: {}", rec.status, serde_json::to_string(&rec).expect("record serializes"));
            return Ok(rec.status != Status::Fail);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
