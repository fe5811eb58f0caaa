use std::fs;
use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;
use twoswitch::explorer::{
    bipartite_counterexample_check, constrained_transition_search, edge_diff_audit,
    enumerate_family, interval_audit, realize_parameter_value, stability_audit,
    unicyclic_transition_search, AuditReport, SearchOutcome, StabilityScope, DEFAULT_BUDGET,
};
use twoswitch::transition::replay;
use twoswitch::{
    compute, fixtures, transition_forest, transition_graph, validate_trace, DegreeSequence,
    FamilyKind, Graph, ParameterKind, SwitchTrace,
};

#[derive(Parser)]
#[command(
    name = "twoswitch",
    version,
    about = "Degree-preserving 2-switch transitions and audits"
)]
struct Cli {
    /// Emit JSON instead of key=value text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for audits. Output does not depend on this.
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a switch trace turning SOURCE into TARGET.
    Transit {
        /// `forest` for f-switches only, `graph` for any 2-switches.
        #[arg(long, default_value = "forest")]
        family: String,
        source: String,
        target: String,
        /// Print every intermediate graph in DOT format instead.
        #[arg(long)]
        dot: bool,
    },
    /// Compute graph parameters.
    Params {
        /// A parameter name or `all`.
        #[arg(long, default_value = "all")]
        kind: String,
        graph: String,
    },
    /// Check that parameters change by at most one under every 2-switch.
    StabilityAudit {
        #[arg(long, default_value = "all")]
        kind: String,
        /// Audit every graph on this many vertices.
        #[arg(long, conflicts_with = "graph")]
        n: Option<usize>,
        /// Audit the switches of a single graph.
        graph: Option<String>,
    },
    /// Value set of a parameter over a realization family.
    IntervalAudit {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value = "all")]
        kind: String,
        /// Also realize this value by walking a transition.
        #[arg(long)]
        realize: Option<usize>,
        #[arg(long)]
        dot: bool,
    },
    /// List every realization of a sequence inside a family.
    Enumerate {
        #[command(flatten)]
        family: FamilyArgs,
        /// Only print how many there are.
        #[arg(long)]
        count: bool,
        #[arg(long)]
        dot: bool,
    },
    /// Check that same-sequence graphs never differ in exactly one edge.
    EdgeDiffAudit {
        #[arg(long)]
        n: usize,
    },
    /// Verify the bipartite pair that no bipartite-only path joins.
    BipartiteCheck {
        /// State budget for the bipartite closure search.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        /// Skip the closure search.
        #[arg(long)]
        no_closure: bool,
    },
    /// Shortest trace whose intermediates all stay in a family.
    ConstrainedSearch {
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        source: String,
        target: String,
    },
    /// Reachability among unicyclic graphs through unicyclic intermediates.
    UnicyclicSearch {
        #[arg(long)]
        n: usize,
    },
    /// Replay a JSON trace and check it.
    ValidateTrace {
        trace: String,
        /// Graph the trace must end at.
        #[arg(long)]
        target: Option<String>,
        /// Fail when an intermediate graph is not a forest.
        #[arg(long)]
        require_forests: bool,
    },
    /// List the shipped fixtures or print one.
    Fixtures {
        name: Option<String>,
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Args)]
struct FamilyArgs {
    /// Degree sequence, e.g. `3,2,2,2,1,1,1`.
    #[arg(long)]
    sequence: String,
    /// all_graphs, forests, unicyclic or bipartite.
    #[arg(long, default_value = "all_graphs")]
    family: String,
}

/// Result of a command: text to print and whether the verdict passed.
struct Output {
    text: String,
    passed: bool,
}

impl Output {
    fn pass(text: String) -> Self {
        Output { text, passed: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.workers {
        Some(k) => match rayon::ThreadPoolBuilder::new().num_threads(k).build() {
            Ok(pool) => pool.install(|| run(&cli)),
            Err(e) => Err(e.into()),
        },
        None => run(&cli),
    };
    match result {
        Ok(out) => {
            print!("{}", out.text);
            if !out.text.is_empty() && !out.text.ends_with('\n') {
                println!();
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Output> {
    let json = cli.json;
    match &cli.command {
        Command::Transit {
            family,
            source,
            target,
            dot,
        } => transit(family, source, target, *dot),
        Command::Params { kind, graph } => params(kind, graph, json),
        Command::StabilityAudit { kind, n, graph } => {
            let scope = match (n, graph) {
                (Some(n), _) => StabilityScope::Order(*n),
                (None, Some(g)) => StabilityScope::Graph(load_graph(g)?),
                (None, None) => bail!("stability-audit needs --n or a graph"),
            };
            let mut reports = Vec::new();
            for kind in parse_kinds(kind, true)? {
                reports.push(stability_audit(kind, &scope)?);
            }
            Ok(audit_output(&reports, json, false))
        }
        Command::IntervalAudit {
            family,
            kind,
            realize,
            dot,
        } => {
            let (s, fam) = family.parse()?;
            let kinds = parse_kinds(kind, true)?;
            let mut reports = Vec::new();
            for &k in &kinds {
                reports.push(interval_audit(&s, k, fam)?);
            }
            let mut out = audit_output(&reports, json, *dot);
            if let Some(value) = realize {
                let [kind] = kinds[..] else {
                    bail!("--realize needs a single --kind");
                };
                let g = realize_parameter_value(&s, kind, *value, fam)?;
                out.text.push_str(&render_graph(&g, "realized", json, *dot));
            }
            Ok(out)
        }
        Command::Enumerate { family, count, dot } => {
            let (s, fam) = family.parse()?;
            let members = enumerate_family(&s, fam)?;
            if members.not_graphical {
                eprintln!("warning: sequence {s} is not graphical");
            }
            let mut text = String::new();
            if *count {
                let total = members.count();
                text = if json {
                    json!({ "count": total }).to_string()
                } else {
                    format!("count={total}\n")
                };
            } else {
                for (i, g) in members.enumerate() {
                    text.push_str(&render_graph(&g, &format!("g{i}"), json, *dot));
                }
            }
            Ok(Output::pass(text))
        }
        Command::EdgeDiffAudit { n } => {
            let r = edge_diff_audit(*n)?;
            let text = if json {
                serde_json::to_string_pretty(&r)?
            } else {
                format!(
                    "order={}\ngraphs={}\nsequences={}\npairs_checked={}\npassed={}\n",
                    r.order, r.graphs, r.sequences, r.pairs_checked, r.passed
                )
            };
            Ok(Output {
                text,
                passed: r.passed,
            })
        }
        Command::BipartiteCheck { budget, no_closure } => {
            let r = bipartite_counterexample_check((!no_closure).then_some(*budget))?;
            let text = if json {
                serde_json::to_string_pretty(&r)?
            } else {
                let mut t = format!(
                    "sequence_ok={}\nbipartite_and_connected={}\ndegree_four_split_in_g0={}\n\
                     degree_four_together_in_g1={}\nnon_isomorphic={}\nhub_neighbor_degrees_g0={}\n\
                     hub_neighbor_degrees_g1={}\none_step_candidates={}\none_step_bipartite={}\n\
                     one_step_holds={}\n",
                    r.sequence_ok,
                    r.bipartite_and_connected,
                    r.degree_four_split_in_g0,
                    r.degree_four_together_in_g1,
                    r.non_isomorphic,
                    join(&r.hub_neighbor_degrees.0),
                    join(&r.hub_neighbor_degrees.1),
                    r.one_step.candidates,
                    r.one_step.bipartite_results,
                    r.one_step.holds,
                );
                if let Some(c) = &r.closure {
                    t.push_str(&format!(
                        "closure_explored={}\nclosure_complete={}\nclosure_reached_target={}\n",
                        c.explored, c.complete, c.reached_target
                    ));
                }
                t.push_str(&format!("passed={}\n", r.passed));
                t
            };
            Ok(Output {
                text,
                passed: r.passed,
            })
        }
        Command::ConstrainedSearch {
            family,
            budget,
            source,
            target,
        } => {
            let fam: FamilyKind = family.parse().map_err(anyhow::Error::msg)?;
            let (g, h) = (load_graph(source)?, load_graph(target)?);
            let out = constrained_transition_search(&g, &h, fam, *budget)?;
            let text = match (&out, json) {
                (SearchOutcome::Found { trace, .. }, _) => trace.to_json(),
                (_, true) => serde_json::to_string_pretty(&out)?,
                (SearchOutcome::NotFound { explored }, false) => {
                    format!("outcome=not_found\nexplored={explored}\n")
                }
                (SearchOutcome::BudgetExhausted { explored }, false) => {
                    format!("outcome=budget_exhausted\nexplored={explored}\n")
                }
            };
            Ok(Output {
                text,
                passed: out.trace().is_some(),
            })
        }
        Command::UnicyclicSearch { n } => {
            let r = unicyclic_transition_search(*n)?;
            let text = if json {
                serde_json::to_string_pretty(&r)?
            } else {
                let mut t = format!(
                    "order={}\nsequences={}\ngraphs={}\nconnected_pairs={}\nseparated_pairs={}\n",
                    r.order, r.sequences, r.graphs, r.connected_pairs, r.separated_pairs
                );
                for f in &r.findings {
                    t.push_str(&format!(
                        "split sequence={} classes={}\n",
                        f.sequence,
                        join(&f.class_sizes)
                    ));
                }
                t
            };
            Ok(Output::pass(text))
        }
        Command::ValidateTrace {
            trace,
            target,
            require_forests,
        } => {
            let text = fs::read_to_string(trace).with_context(|| format!("reading {trace}"))?;
            let trace = SwitchTrace::from_json(&text)?;
            let target = match target {
                Some(t) => load_graph(t)?,
                None => replay(&trace)
                    .map(|mut gs| gs.pop().unwrap())
                    .unwrap_or_else(|_| trace.initial.clone()),
            };
            let r = validate_trace(&trace, &target, *require_forests);
            let text = if json {
                serde_json::to_string_pretty(&r)?
            } else {
                let opt = |x: Option<usize>| x.map_or("none".to_string(), |v| v.to_string());
                format!(
                    "length={}\nbound={}\nwithin_bound={}\nreaches_target={}\ntrivial_step={}\n\
                     forests_required={}\nnon_forest_step={}\npassed={}\n",
                    r.length,
                    r.bound,
                    r.within_bound,
                    r.reaches_target,
                    opt(r.trivial_step),
                    r.forests_required,
                    opt(r.non_forest_step),
                    r.passed
                )
            };
            Ok(Output {
                text,
                passed: r.passed,
            })
        }
        Command::Fixtures { name, dot } => match name {
            None => Ok(Output::pass(
                fixtures::ALL
                    .iter()
                    .map(|(n, _)| format!("{n}\n"))
                    .collect(),
            )),
            Some(name) => {
                let g =
                    fixtures::by_name(name).with_context(|| format!("unknown fixture `{name}`"))?;
                let text = if *dot {
                    g.to_dot(name)
                } else if json {
                    serde_json::to_string(&g)?
                } else {
                    g.to_edge_list()
                };
                Ok(Output::pass(text))
            }
        },
    }
}

impl FamilyArgs {
    fn parse(&self) -> Result<(DegreeSequence, FamilyKind)> {
        let s: DegreeSequence = self
            .sequence
            .parse()
            .map_err(|e| anyhow::anyhow!("--sequence: {e}"))?;
        let fam: FamilyKind = self
            .family
            .parse()
            .map_err(|e| anyhow::anyhow!("--family: {e}"))?;
        Ok((s, fam))
    }
}

fn transit(family: &str, source: &str, target: &str, dot: bool) -> Result<Output> {
    let (g, h) = (load_graph(source)?, load_graph(target)?);
    let trace = match family {
        "forest" | "forests" => transition_forest(&g, &h)?,
        "graph" | "graphs" | "all" | "all_graphs" => transition_graph(&g, &h)?,
        other => bail!("--family: expected `forest` or `graph`, got `{other}`"),
    };
    if dot {
        let text = replay(&trace)?
            .iter()
            .enumerate()
            .map(|(i, g)| g.to_dot(&format!("step{i}")))
            .collect();
        return Ok(Output::pass(text));
    }
    Ok(Output::pass(trace.to_json()))
}

fn params(kind: &str, graph: &str, json: bool) -> Result<Output> {
    let g = load_graph(graph)?;
    let explicit = kind != "all";
    let mut kinds = parse_kinds(kind, false)?;
    kinds.sort_by_key(|k| k.name());
    let mut values = Vec::new();
    for k in kinds {
        match compute(k, &g) {
            Ok(v) => values.push((k, v)),
            Err(e) if explicit => bail!("{k}: {e}"),
            Err(_) => {}
        }
    }
    let text = if json {
        let map: serde_json::Map<String, serde_json::Value> = values
            .iter()
            .map(|(k, v)| (k.name().to_string(), json!(v)))
            .collect();
        serde_json::to_string_pretty(&map)?
    } else {
        values.iter().map(|(k, v)| format!("{k}={v}\n")).collect()
    };
    Ok(Output::pass(text))
}

fn parse_kinds(kind: &str, stable_only: bool) -> Result<Vec<ParameterKind>> {
    if kind == "all" {
        return Ok(if stable_only {
            ParameterKind::STABLE.to_vec()
        } else {
            ParameterKind::ALL.to_vec()
        });
    }
    kind.split(',')
        .map(|k| k.trim().parse().map_err(|e| anyhow::anyhow!("--kind: {e}")))
        .collect()
}

fn audit_output(reports: &[AuditReport], json: bool, dot: bool) -> Output {
    let passed = reports.iter().all(|r| r.passed);
    let text = if json {
        serde_json::to_string_pretty(reports).expect("reports serialize")
    } else {
        let mut t = String::new();
        for r in reports {
            t.push_str(&format!("kind={}", r.kind));
            if let Some(f) = r.family {
                t.push_str(&format!(" family={f}"));
            }
            if let Some(s) = &r.sequence {
                t.push_str(&format!(" sequence={s}"));
            }
            t.push_str(&format!(
                " values={} interval_ok={} checked={} skipped={} passed={}",
                join(&r.values),
                r.interval_ok,
                r.checked,
                r.skipped,
                r.passed
            ));
            if let Some((g, a)) = &r.counterexample {
                t.push_str(&format!(" counterexample=\"{a}\" on {:?}", g.edges()));
            }
            if let Some(note) = &r.note {
                t.push_str(&format!(" note=\"{note}\""));
            }
            t.push('\n');
            if dot {
                for (v, g) in &r.witnesses {
                    t.push_str(&g.to_dot(&format!("{}_{v}", r.kind)));
                }
            }
        }
        t
    };
    Output { text, passed }
}

fn render_graph(g: &Graph, name: &str, json: bool, dot: bool) -> String {
    if dot {
        g.to_dot(name)
    } else if json {
        format!("{}\n", serde_json::to_string(g).expect("graphs serialize"))
    } else {
        let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
        format!("{}\n", edges.join(" "))
    }
}

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// A fixture name or a path to an edge-list file.
fn load_graph(arg: &str) -> Result<Graph> {
    if let Some(g) = fixtures::by_name(arg) {
        return Ok(g);
    }
    let path = Path::new(arg);
    let text = fs::read_to_string(path)
        .with_context(|| format!("`{arg}` is neither a fixture nor a readable file"))?;
    Graph::parse_edge_list(&text).with_context(|| format!("parsing {arg}"))
}
