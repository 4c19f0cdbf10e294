//! Command-line front end for `partgraph`.
//!
//! [`run`] parses arguments, dispatches to the library and writes results to
//! standard output or `--out`. Exit status: 0 on success, 1 on usage or
//! domain errors, 2 when a check that must hold has failed.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use partgraph::atlas::{build_atlas, growth_profile, normalized_profile, ProfileKind};
use partgraph::graph::ExportFormat;
use partgraph::invariants::{local_translation_check, monotonicity_check};
use partgraph::motifs::builtin_templates;
use partgraph::overlay::{persistence_check, verify_induced_embedding, verify_sweep};
use partgraph::thresholds::{extremal_threshold, motif_threshold};
use partgraph::{build_graph, Caps, Error, ExtremalKind, GraphCache, Partition};
use serde_json::json;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "partgraph", version, about = "Partition graphs G_n: overlays, motifs, thresholds, atlas")]
struct Cli {
    #[command(flatten)]
    caps: CapArgs,

    /// Worker threads (default: one per core).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    workers: Option<u32>,

    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct CapArgs {
    /// Largest n whose partitions may be enumerated.
    #[arg(long, global = true, env = "PARTGRAPH_PARTITION_CAP", value_parser = positive())]
    partition_cap: Option<u32>,
    /// Largest n for which G_n may be built.
    #[arg(long, global = true, env = "PARTGRAPH_GRAPH_CAP", value_parser = positive())]
    graph_cap: Option<u32>,
    /// Largest n for which local clique numbers are computed.
    #[arg(long, global = true, env = "PARTGRAPH_CLIQUE_CAP", value_parser = positive())]
    clique_cap: Option<u32>,
    /// Largest closed neighbourhood handed to the clique search.
    #[arg(long, global = true, env = "PARTGRAPH_NEIGHBORHOOD_CAP", value_parser = positive())]
    neighborhood_cap: Option<u32>,
    /// Largest source level for overlay certification.
    #[arg(long, global = true, env = "PARTGRAPH_OVERLAY_CAP", value_parser = positive())]
    overlay_cap: Option<u32>,
}

fn positive() -> clap::builder::RangedI64ValueParser<u32> {
    clap::value_parser!(u32).range(1..)
}

impl CapArgs {
    fn caps(&self) -> Caps {
        let d = Caps::default();
        Caps {
            partition_n: self.partition_cap.unwrap_or(d.partition_n),
            graph_n: self.graph_cap.unwrap_or(d.graph_n),
            clique_n: self.clique_cap.unwrap_or(d.clique_n),
            neighborhood: self.neighborhood_cap.map_or(d.neighborhood, |v| v as usize),
            overlay_n: self.overlay_cap.unwrap_or(d.overlay_n),
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build G_n and export it.
    Build {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Extremal invariants Delta, Omega, S over a range, with monotonicity.
    Invariants {
        #[arg(long)]
        from: u32,
        #[arg(long)]
        to: u32,
        #[arg(long, value_enum, default_value_t = TableFormat::Json)]
        format: TableFormat,
    },
    /// Certify properties that must hold at every level.
    #[command(subcommand)]
    Verify(Verify),
    /// Rooted induced motif search.
    #[command(subcommand)]
    Motif(MotifCmd),
    /// First-appearance scans.
    #[command(subcommand)]
    Threshold(Threshold),
    /// Per-level atlas (JSON, plus a CSV companion next to --out).
    Atlas {
        #[arg(long)]
        from: u32,
        #[arg(long)]
        to: u32,
        /// Comma-separated names or template files (default: all built-ins).
        #[arg(long, value_delimiter = ',')]
        templates: Vec<String>,
    },
    /// Growth profile a_n, or a_n / b_n with --over.
    Profile {
        /// vertices, edges, delta, omega, s or motif:<name>
        #[arg(long)]
        kind: String,
        #[arg(long)]
        over: Option<String>,
        #[arg(long)]
        from: u32,
        #[arg(long)]
        to: u32,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableFormat {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Verify {
    /// Check that T_tau: G_n -> G_{n+|tau|} is an induced embedding.
    Overlay {
        #[arg(long)]
        n: u32,
        /// Translation partition, e.g. "2,1".
        #[arg(long, required_unless_present = "sweep", conflicts_with = "sweep")]
        tau: Option<String>,
        /// Check every tau of size at most K instead.
        #[arg(long)]
        sweep: Option<u32>,
    },
    /// Compare degree and local clique number before and after translation.
    Translation {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        tau: String,
    },
    /// Re-find a template at every level and validate translated witnesses.
    Persistence {
        #[arg(long)]
        template: String,
        #[arg(long)]
        from: u32,
        #[arg(long)]
        to: u32,
    },
}

#[derive(Debug, Subcommand)]
enum MotifCmd {
    /// List occurrences of a template in G_n.
    Find {
        #[arg(long)]
        template: String,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// List the built-in templates.
    List,
}

#[derive(Debug, Subcommand)]
enum Threshold {
    /// First level containing a template.
    Motif {
        #[arg(long)]
        template: String,
        #[arg(long)]
        max_n: u32,
        #[arg(long)]
        verify_to: Option<u32>,
    },
    /// First level where delta, omega or s reaches a bound.
    Extremal {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        bound: usize,
        #[arg(long)]
        max_n: u32,
        #[arg(long)]
        verify_to: Option<u32>,
    },
}

/// What a successful command produced.
struct Output {
    text: String,
    /// Extra files next to the main output, as `(path, contents)`.
    companions: Vec<(PathBuf, String)>,
    /// The command ran but its check failed.
    violated: bool,
}

impl Output {
    fn text(text: String) -> Self {
        Output {
            text,
            companions: Vec::new(),
            violated: false,
        }
    }
}

fn pretty<T: serde::Serialize + ?Sized>(value: &T) -> anyhow::Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn partition_arg(literal: &str) -> anyhow::Result<Partition> {
    Ok(literal.parse::<Partition>()?)
}

fn dispatch(cli: &Cli) -> anyhow::Result<Output> {
    let caps = cli.caps.caps();
    let mut cache = GraphCache::new(caps);
    let mut registry = builtin_templates();
    Ok(match &cli.command {
        Command::Build { n, format } => {
            let format: ExportFormat = format.parse()?;
            Output::text(build_graph(*n, &caps)?.export(format))
        }
        Command::Invariants { from, to, format } => {
            let report = monotonicity_check(*from, *to, &caps)?;
            let text = match format {
                TableFormat::Json => pretty(&report)?,
                TableFormat::Csv => {
                    let mut csv = String::from("n,delta,omega,s,delta_witness,omega_witness\n");
                    for r in &report.records {
                        writeln!(
                            csv,
                            "{},{},{},{},\"{}\",\"{}\"",
                            r.n, r.delta, r.omega, r.s, r.delta_witness, r.omega_witness
                        )?;
                    }
                    csv
                }
            };
            Output {
                violated: !report.pass,
                ..Output::text(text)
            }
        }
        Command::Verify(Verify::Overlay { n, tau, sweep }) => {
            let reports = match (tau, sweep) {
                (Some(tau), _) => vec![verify_induced_embedding(*n, &partition_arg(tau)?, &caps)?],
                (None, Some(k)) => verify_sweep(*n, *k, &caps)?,
                (None, None) => unreachable!("clap requires --tau or --sweep"),
            };
            let violated = reports.iter().any(|r| !r.pass());
            let text = if sweep.is_some() {
                pretty(&reports)?
            } else {
                pretty(&reports[0])?
            };
            Output {
                violated,
                ..Output::text(text)
            }
        }
        Command::Verify(Verify::Translation { n, tau }) => {
            let report = local_translation_check(*n, &partition_arg(tau)?, &caps)?;
            Output {
                violated: !report.pass,
                ..Output::text(pretty(&report)?)
            }
        }
        Command::Verify(Verify::Persistence { template, from, to }) => {
            let motif = registry.resolve(template)?;
            let t = motif
                .template_at(*from)
                .ok_or_else(|| Error::Domain(format!("{} is not defined at n = {from}", motif.name())))?;
            let report = persistence_check(&t, *from, *to, &mut cache)?;
            Output {
                violated: !report.pass,
                ..Output::text(pretty(&report)?)
            }
        }
        Command::Motif(MotifCmd::Find { template, n, limit }) => {
            let motif = registry.resolve(template)?;
            let g = cache.get(*n)?;
            let occurrences = motif.occurrences(&g, *limit)?;
            Output::text(pretty(&json!({
                "template": motif.name(),
                "n": n,
                "count": occurrences.len(),
                "limit": limit,
                "occurrences": occurrences,
            }))?)
        }
        Command::Motif(MotifCmd::List) => {
            let list: Vec<_> = registry
                .motifs()
                .iter()
                .map(|m| match m.template_at(4) {
                    Some(t) => json!({
                        "name": m.name(),
                        "vertices": t.vertex_count(),
                        "edges": t.edges(),
                        "roots": t.roots(),
                        "min_n": t.min_n(),
                    }),
                    None => json!({ "name": m.name() }),
                })
                .collect();
            Output::text(pretty(&list)?)
        }
        Command::Threshold(Threshold::Motif {
            template,
            max_n,
            verify_to,
        }) => {
            let motif = registry.resolve(template)?;
            Output::text(pretty(&motif_threshold(&motif, *max_n, *verify_to, &mut cache)?)?)
        }
        Command::Threshold(Threshold::Extremal {
            kind,
            bound,
            max_n,
            verify_to,
        }) => {
            let kind: ExtremalKind = kind.parse()?;
            Output::text(pretty(&extremal_threshold(kind, *bound, *max_n, *verify_to, &mut cache)?)?)
        }
        Command::Atlas { from, to, templates } => {
            let motifs = if templates.is_empty() {
                registry.motifs().to_vec()
            } else {
                templates
                    .iter()
                    .map(|s| registry.resolve(s.trim()))
                    .collect::<Result<Vec<_>, _>>()?
            };
            let atlas = build_atlas(*from, *to, &motifs, &caps)?;
            let companions = match &cli.out {
                Some(path) => vec![(path.with_extension("csv"), atlas.to_csv())],
                None => Vec::new(),
            };
            Output {
                companions,
                ..Output::text(atlas.to_json())
            }
        }
        Command::Profile { kind, over, from, to } => {
            let kind: ProfileKind = kind.parse()?;
            let text = match over {
                None => {
                    let values = growth_profile(&kind, *from, *to, &registry, &caps)?;
                    pretty(&json!({
                        "kind": kind.to_string(),
                        "from": from,
                        "to": to,
                        "values": values,
                    }))?
                }
                Some(over) => {
                    let over: ProfileKind = over.parse()?;
                    let points = normalized_profile(&kind, &over, *from, *to, &registry, &caps)?;
                    pretty(&json!({
                        "numerator": kind.to_string(),
                        "denominator": over.to_string(),
                        "points": points,
                    }))?
                }
            };
            Output::text(text)
        }
    })
}

fn write_file(path: &Path, contents: &str) -> anyhow::Result<()> {
    std::fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

fn exit_code(err: &anyhow::Error) -> i32 {
    match err.downcast_ref::<Error>() {
        Some(e) if e.is_invariant_violation() => EXIT_VIOLATION,
        _ => EXIT_USAGE,
    }
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                stdout.write_all(rendered.as_bytes())
            } else {
                stderr.write_all(rendered.as_bytes())
            };
            return code;
        }
    };

    let result = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.workers.unwrap_or(0) as usize)
        .build()
        .map_err(|e| anyhow!("starting worker pool: {e}"))
        .and_then(|pool| pool.install(|| dispatch(&cli)));

    let output = result.and_then(|output| {
        match &cli.out {
            Some(path) => write_file(path, &output.text)?,
            None => stdout.write_all(output.text.as_bytes())?,
        }
        for (path, contents) in &output.companions {
            write_file(path, contents)?;
        }
        Ok(output)
    });

    match output {
        Ok(output) if output.violated => {
            let _ = writeln!(stderr, "partgraph: check failed; see report");
            EXIT_VIOLATION
        }
        Ok(_) => EXIT_OK,
        Err(err) => {
            let _ = writeln!(stderr, "partgraph: {err:#}");
            exit_code(&err)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariant_violations_map_to_exit_two() {
        let err = anyhow::Error::from(Error::InvariantViolation("edge lost".into()));
        assert_eq!(exit_code(&err), EXIT_VIOLATION);
        let err = anyhow::Error::from(Error::Domain("n = 0".into()));
        assert_eq!(exit_code(&err), EXIT_USAGE);
        assert_eq!(exit_code(&anyhow!("io")), EXIT_USAGE);
    }

    #[test]
    fn run_writes_to_the_given_streams() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(["partgraph", "build", "--n", "1", "--format", "dot"], &mut out, &mut err);
        assert_eq!(code, EXIT_OK);
        assert_eq!(String::from_utf8(out).unwrap(), "graph G1 {\n  v0 [label=\"1\"];\n}\n");
        assert!(err.is_empty());
    }
}
