//! `rdfent`: decide RDF(S) entailment and satisfiability from the command line.
//!
//! Exit codes: 0 entailed / satisfiable / success, 1 not entailed /
//! unsatisfiable, 2 usage or processing error.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rdfent::datatype::{normalize_graph, DatatypeMap};
use rdfent::dllite::export_dllite;
use rdfent::engine::{Limits, Materializer, Stats};
use rdfent::hardness::{accessibility_oracle, colorable, gen_k_coloring, gen_path_system, ReductionSpec};
use rdfent::io::{parse_ntriples, serialize};
use rdfent::model::{BaseRegime, DatatypeMode, Graph, Regime};
use rdfent::reasoner::{prepare, solve, Config, Problem};

#[derive(Parser, Debug)]
#[command(name = "rdfent", version, about = "Decide RDF(S) entailment via Horn frame-logic embeddings")]
struct Cli {
    /// Abort when materialization exceeds this many facts.
    #[arg(long, global = true, value_name = "N")]
    max_facts: Option<usize>,
    /// Abort after this many milliseconds.
    #[arg(long, global = true, value_name = "N")]
    timeout_ms: Option<u64>,
    /// Print the generated Horn theory to stderr.
    #[arg(long, global = true)]
    dump_theory: bool,
    /// Print materialization statistics as JSON to stderr.
    #[arg(long, global = true)]
    stats: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct RegimeArgs {
    #[arg(long, value_enum)]
    regime: RegimeArg,
    #[arg(long, value_enum, default_value = "none")]
    datatypes: DatatypesArg,
    /// Datatype map (JSON); defaults to the XSD map in datatype modes.
    #[arg(long, value_name = "FILE")]
    dtmap: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether S entails E.
    Entail {
        #[command(flatten)]
        regime: RegimeArgs,
        s: PathBuf,
        e: PathBuf,
    },
    /// Decide whether S is satisfiable.
    Sat {
        #[command(flatten)]
        regime: RegimeArgs,
        s: PathBuf,
    },
    /// Replace every literal by the representative of its value class.
    Normalize {
        #[arg(long, value_name = "FILE")]
        dtmap: Option<PathBuf>,
        s: PathBuf,
    },
    /// Print the DL-Lite_R knowledge base of a ground standard graph.
    ExportDllite { s: PathBuf },
    /// Generate a hardness-reduction instance from a JSON spec.
    GenReduction {
        #[arg(value_enum)]
        kind: ReductionKind,
        spec: PathBuf,
        /// Seed for randomly drawn parts (overrides the spec).
        #[arg(long)]
        seed: Option<u64>,
        /// Write S.nt, E.nt, expected.txt (and dtmap.json) here instead of stdout.
        #[arg(long, value_name = "DIR")]
        out_dir: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RegimeArg {
    Simple,
    Rdf,
    Rdfs,
    Erdfs,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DatatypesArg {
    None,
    Dstar,
    D,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReductionKind {
    PathSystem,
    KColoring,
}

impl RegimeArgs {
    fn regime(&self) -> Regime {
        let base = match self.regime {
            RegimeArg::Simple => BaseRegime::Simple,
            RegimeArg::Rdf => BaseRegime::Rdf,
            RegimeArg::Rdfs => BaseRegime::Rdfs,
            RegimeArg::Erdfs => BaseRegime::Erdfs,
        };
        let datatypes = match self.datatypes {
            DatatypesArg::None => DatatypeMode::None,
            DatatypesArg::Dstar => DatatypeMode::DStar,
            DatatypesArg::D => DatatypeMode::D,
        };
        Regime::new(base, datatypes)
    }
}

/// Write to stdout; a closed pipe ends output silently.
fn emit(text: &str) -> anyhow::Result<()> {
    match io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        other => Ok(other?),
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    let text = read(path)?;
    parse_ntriples(&text).with_context(|| format!("in {}", path.display()))
}

fn read_dtmap(path: Option<&Path>) -> anyhow::Result<Option<DatatypeMap>> {
    path.map(|p| DatatypeMap::from_json(&read(p)?).with_context(|| format!("in {}", p.display())))
        .transpose()
}

impl Cli {
    fn config(&self) -> Config {
        Config {
            limits: Limits {
                max_facts: self.max_facts,
                timeout: self.timeout_ms.map(Duration::from_millis),
            },
            ..Config::default()
        }
    }

    fn dump(&self, problem: &Problem) {
        if self.dump_theory {
            eprint!("{}", problem.dump());
        }
    }

    fn print_stats(&self, stats: &Stats) -> anyhow::Result<()> {
        if self.stats {
            eprintln!("{}", serde_json::to_string(stats)?);
        }
        Ok(())
    }

    fn run(&self) -> anyhow::Result<ExitCode> {
        match &self.command {
            Command::Entail { regime, s, e } => {
                let (s, e) = (read_graph(s)?, read_graph(e)?);
                let dtmap = read_dtmap(regime.dtmap.as_deref())?;
                let config = self.config();
                let problem = prepare(&s, &e, regime.regime(), dtmap.as_ref(), &config)?;
                self.dump(&problem);
                let result = solve(&problem, config.limits)?;
                self.print_stats(&result.stats)?;
                let mut out = format!("{}\n", result.verdict_line());
                for (var, term) in result.witness.iter().flatten() {
                    out.push_str(&format!("WITNESS: {var} = {term}\n"));
                }
                emit(&out)?;
                Ok(ExitCode::from(if result.is_entailed() { 0 } else { 1 }))
            }
            Command::Sat { regime, s } => {
                let s = read_graph(s)?;
                let dtmap = read_dtmap(regime.dtmap.as_deref())?;
                let config = self.config();
                let problem = prepare(&s, &Graph::new(), regime.regime(), dtmap.as_ref(), &config)?;
                self.dump(&problem);
                let mut m = Materializer::new(&problem.theory, config.limits)?;
                m.run()?;
                self.print_stats(m.stats())?;
                let sat = !m.is_inconsistent();
                emit(if sat { "SATISFIABLE\n" } else { "UNSATISFIABLE\n" })?;
                Ok(ExitCode::from(if sat { 0 } else { 1 }))
            }
            Command::Normalize { dtmap, s } => {
                let s = read_graph(s)?;
                let dtmap = read_dtmap(dtmap.as_deref())?.unwrap_or_else(DatatypeMap::xsd);
                emit(&serialize(&normalize_graph(&s, &dtmap)))?;
                Ok(ExitCode::SUCCESS)
            }
            Command::ExportDllite { s } => {
                let s = read_graph(s)?;
                emit(&export_dllite(&s)?.to_string())?;
                Ok(ExitCode::SUCCESS)
            }
            Command::GenReduction {
                kind,
                spec,
                seed,
                out_dir,
            } => {
                let spec = ReductionSpec::from_json(&read(spec)?)?;
                let instance = match kind {
                    ReductionKind::PathSystem => path_system_instance(&spec, *seed)?,
                    ReductionKind::KColoring => coloring_instance(&spec, *seed)?,
                };
                match out_dir {
                    Some(dir) => instance.write(dir)?,
                    None => emit(&instance.render())?,
                }
                Ok(ExitCode::SUCCESS)
            }
        }
    }
}

/// A generated instance with its expected verdict.
struct Instance {
    regime: Regime,
    s: Graph,
    e: Graph,
    dtmap: Option<String>,
    expected: bool,
    notes: Vec<String>,
}

impl Instance {
    fn expected_text(&self) -> String {
        let verdict = if self.expected { "ENTAILED" } else { "NOT-ENTAILED" };
        let mut out = format!("VERDICT: {verdict}\n");
        for n in &self.notes {
            out.push_str(&format!("# {n}\n"));
        }
        out
    }

    fn render(&self) -> String {
        let mut out = format!("# regime {}\n# S\n{}# E\n{}", self.regime, serialize(&self.s), serialize(&self.e));
        if let Some(d) = &self.dtmap {
            out.push_str(&format!("# dtmap\n{d}\n"));
        }
        out.push_str("# expected\n");
        out.push_str(&self.expected_text());
        out
    }

    fn write(&self, dir: &Path) -> anyhow::Result<()> {
        fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
        let mut files = vec![
            ("S.nt", serialize(&self.s)),
            ("E.nt", serialize(&self.e)),
            ("expected.txt", format!("# regime {}\n{}", self.regime, self.expected_text())),
        ];
        if let Some(d) = &self.dtmap {
            files.push(("dtmap.json", format!("{d}\n")));
        }
        for (name, text) in files {
            let path = dir.join(name);
            fs::write(&path, text).with_context(|| format!("cannot write {}", path.display()))?;
        }
        Ok(())
    }
}

fn path_system_instance(spec: &ReductionSpec, seed: Option<u64>) -> anyhow::Result<Instance> {
    if spec.edges.is_some() || spec.k.is_some() {
        bail!(rdfent::Error::Config("path-system specs take sources, terminals and relations".into()));
    }
    let ps = spec.path_system(seed)?;
    let red = gen_path_system(&ps);
    let accessible = accessibility_oracle(&ps);
    let reached: Vec<&String> = ps.terminals.iter().filter(|t| accessible.contains(*t)).collect();
    let mut notes = vec![format!(
        "accessible: {}",
        accessible.iter().cloned().collect::<Vec<_>>().join(" ")
    )];
    for (t, _) in &red.queries {
        let v = if accessible.contains(t) { "ENTAILED" } else { "NOT-ENTAILED" };
        notes.push(format!("terminal {t}: {v}"));
    }
    Ok(Instance {
        regime: Regime::RDFS,
        s: red.graph,
        e: [red.any_terminal].into_iter().collect(),
        dtmap: None,
        expected: !reached.is_empty(),
        notes,
    })
}

fn coloring_instance(spec: &ReductionSpec, seed: Option<u64>) -> anyhow::Result<Instance> {
    if spec.sources.is_some() || spec.terminals.is_some() || spec.relations.is_some() {
        bail!(rdfent::Error::Config("k-coloring specs take edges and k".into()));
    }
    let p = spec.coloring(seed)?;
    let red = gen_k_coloring(&p)?;
    let is_colorable = colorable(&p);
    Ok(Instance {
        regime: Regime::new(BaseRegime::Simple, DatatypeMode::D),
        s: red.s,
        e: red.h,
        dtmap: Some(red.datatypes.to_json()),
        expected: !is_colorable,
        notes: vec![
            format!("{}-colorable: {is_colorable}", p.k),
            "the datatype map is not definite; the engine refuses it".into(),
        ],
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.run() {
        Ok(code) => code,
        Err(err) => {
            let code = err
                .chain()
                .find_map(|e| e.downcast_ref::<rdfent::Error>())
                .map_or("E_IO", rdfent::Error::code);
            eprintln!("error[{code}]: {err:#}");
            ExitCode::from(2)
        }
    }
}
