//! Subcommand implementations.

use std::io::Write;

use alphaspec::bounds::{bound_report, BoundId};
use alphaspec::experiments::{
    default_timing_families, figure_sweep, format_plain, parse_alpha_spec, reproduce_table,
    round_half_even, search, sweep_compare, timing_compare, verify_graph, write_timing_csv,
    GraphSource, Predicate, Reference, SearchTask, Status, TableId, TimedBound,
};
use alphaspec::graph::{read_edge_list, write_edge_list};
use alphaspec::linalg::{a_alpha, spectrum, Spectrum};
use alphaspec::{Family, Graph, LineGraph};

use crate::args::{Command, Format, GraphArgs};
use crate::CliError;

type Out<'a> = &'a mut dyn Write;

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Validation(msg.into())
}

impl GraphArgs {
    fn is_set(&self) -> bool {
        self.family.is_some() || self.edges.is_some()
    }

    /// The graph and an identifier for it in output rows.
    fn load(&self) -> Result<(String, Graph), CliError> {
        if let Some(path) = &self.edges {
            let g = read_edge_list(path)?;
            let id = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "edges".into());
            return Ok((id, g));
        }
        let Some(kind) = self.family.as_deref() else {
            return Err(invalid("a graph is required: pass --family or --edges"));
        };
        let need = |v: Option<usize>, flag: &str| {
            v.ok_or_else(|| invalid(format!("family {kind} needs --{flag}")))
        };
        let params = match kind {
            "complete_bipartite" => vec![need(self.n1, "n1")?, need(self.n2, "n2")?],
            "pineapple" => vec![need(self.p, "p")?, need(self.q, "q")?],
            "binomial_tree" => vec![need(self.k, "k")?],
            "windmill" => vec![need(self.n, "n")?, need(self.k, "k")?],
            "petersen" => vec![],
            _ => vec![need(self.n, "n")?],
        };
        let fam = Family::parse(kind, &params)?;
        let id = match fam.param_string() {
            p if p.is_empty() => fam.tag().to_string(),
            p => format!("{}_{p}", fam.tag()),
        };
        Ok((id, fam.build()?))
    }
}

/// Eigenvalue text: rounded to 10 decimals, no trailing `.0`.
fn eig_text(x: f64) -> String {
    let r = round_half_even(x, 10);
    format!("{}", if r == 0.0 { 0.0 } else { r })
}

fn spectrum_line(s: &Spectrum) -> String {
    s.groups()
        .iter()
        .map(|&(v, k)| {
            if k > 1 {
                format!("{} (x{k})", eig_text(v))
            } else {
                eig_text(v)
            }
        })
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn dispatch(cmd: Command, out: Out) -> Result<(), CliError> {
    match cmd {
        Command::Spectrum {
            graph,
            alpha,
            format,
        } => cmd_spectrum(&graph, &alpha, format, out),
        Command::Linegraph { graph } => {
            let (_, g) = graph.load()?;
            let lg = LineGraph::of(&g)?;
            out.write_all(write_edge_list(&lg.graph).as_bytes())?;
            Ok(())
        }
        Command::Bounds {
            graph,
            alpha,
            format,
        } => cmd_bounds(&graph, &alpha, format, out),
        Command::Table { which } => {
            let t = reproduce_table(TableId::from_number(which)?);
            t.write_csv(out)?;
            Ok(())
        }
        Command::Sweep {
            graph,
            figure,
            bounds,
            reference,
            alpha,
        } => cmd_sweep(&graph, figure, &bounds, &reference, alpha.as_deref(), out),
        Command::Search {
            predicate,
            exhaustive,
            random,
            n_min,
            n_max,
            seed,
            budget,
            alpha,
            graph,
        } => {
            let predicate = Predicate::parse(&predicate)
                .ok_or_else(|| invalid(format!("unknown predicate {predicate}")))?;
            let source = match (exhaustive, random, graph.is_set()) {
                (Some(n_max), None, false) => GraphSource::Exhaustive { n_max },
                (None, Some(count), false) => GraphSource::Random {
                    count,
                    n_min,
                    n_max,
                    seed,
                },
                (None, None, true) => GraphSource::Listed(vec![graph.load()?]),
                _ => {
                    return Err(invalid(
                        "pass exactly one of --exhaustive, --random or a graph",
                    ))
                }
            };
            let task = SearchTask {
                predicate,
                source,
                alphas: parse_alpha_spec(&alpha)?,
                budget,
            };
            let outcome = search(&task)?;
            outcome.write_csv(out)?;
            eprintln!("{}", outcome.summary());
            Ok(())
        }
        Command::Timing {
            reps,
            alpha,
            families,
            sizes,
        } => {
            let families = match (families, sizes) {
                (None, None) => default_timing_families(),
                (kinds, sizes) => {
                    let kinds = kinds
                        .unwrap_or_else(|| ["star", "complete", "helm"].map(String::from).to_vec());
                    let sizes = sizes.unwrap_or_else(|| (1..=10).map(|k| 100 * k).collect());
                    let mut fams = Vec::new();
                    for k in &kinds {
                        if !matches!(k.as_str(), "star" | "complete" | "helm") {
                            return Err(invalid(format!(
                                "timing family {k} is not star, complete or helm"
                            )));
                        }
                        for &n in &sizes {
                            fams.push(Family::parse(k, &[n])?);
                        }
                    }
                    fams
                }
            };
            let records = timing_compare(&families, &TimedBound::ALL, reps, alpha)?;
            write_timing_csv(&records, out)?;
            Ok(())
        }
        Command::Verify { graph, alpha } => {
            let (id, g) = graph.load()?;
            let alphas = match alpha {
                Some(a) => parse_alpha_spec(&a)?,
                None => vec![0.0, 0.25, 0.5, 0.75, 1.0],
            };
            let checks = verify_graph(&g, &alphas)?;
            let failed = checks.iter().filter(|c| c.status == Status::Fail).count();
            for c in &checks {
                writeln!(out, "{}", c.line())?;
            }
            writeln!(out, "{id}: {} checks, {failed} failed", checks.len())?;
            if failed > 0 {
                return Err(CliError::Numerical(format!(
                    "{failed} check(s) failed on {id}"
                )));
            }
            Ok(())
        }
    }
}

fn cmd_spectrum(graph: &GraphArgs, alpha: &str, format: Format, out: Out) -> Result<(), CliError> {
    let (_, g) = graph.load()?;
    let alphas = parse_alpha_spec(alpha)?;
    if format == Format::Csv {
        writeln!(out, "alpha,eigenvalue,multiplicity")?;
    }
    for &a in &alphas {
        let s = spectrum(&a_alpha(&g, a)?)?;
        match format {
            Format::Text if alphas.len() == 1 => writeln!(out, "{}", spectrum_line(&s))?,
            Format::Text => writeln!(out, "alpha={}: {}", format_plain(a), spectrum_line(&s))?,
            Format::Csv => {
                for &(v, k) in s.groups() {
                    writeln!(out, "{},{},{k}", format_plain(a), format_plain(v))?;
                }
            }
        }
    }
    Ok(())
}

fn cmd_bounds(graph: &GraphArgs, alpha: &str, format: Format, out: Out) -> Result<(), CliError> {
    let (id, g) = graph.load()?;
    if format == Format::Csv {
        writeln!(
            out,
            "graph_id,alpha,bound,side,target,value,eigenvalue,gap,holds"
        )?;
    }
    for a in parse_alpha_spec(alpha)? {
        let report = bound_report(&g, a, &id)?;
        let violated: Vec<BoundId> = report.violations().iter().map(|e| e.id).collect();
        for e in &report.entries {
            let target = report.target_value(e.target).unwrap_or(f64::NAN);
            let holds = !violated.contains(&e.id);
            match format {
                Format::Csv => writeln!(
                    out,
                    "{id},{},{},{},{},{},{},{},{holds}",
                    format_plain(a),
                    e.id.tag(),
                    e.side.tag(),
                    e.target.tag(),
                    format_plain(e.value),
                    format_plain(target),
                    format_plain(e.gap),
                )?,
                Format::Text => writeln!(
                    out,
                    "alpha={} {:<11} {} bound on {}: {} (eigenvalue {}){}",
                    format_plain(a),
                    e.id.tag(),
                    e.side.tag(),
                    e.target.tag(),
                    eig_text(e.value),
                    eig_text(target),
                    if holds { "" } else { " VIOLATED" },
                )?,
            }
        }
    }
    Ok(())
}

fn cmd_sweep(
    graph: &GraphArgs,
    figure: Option<u8>,
    bounds: &[String],
    reference: &str,
    alpha: Option<&str>,
    out: Out,
) -> Result<(), CliError> {
    let alphas = alpha.map(parse_alpha_spec).transpose()?;
    let table = if let Some(which) = figure {
        figure_sweep(which, alphas.as_deref())?
    } else {
        let (id, g) = graph.load()?;
        let ids = bounds
            .iter()
            .map(|b| BoundId::parse(b).ok_or_else(|| invalid(format!("unknown bound {b}"))))
            .collect::<Result<Vec<_>, _>>()?;
        let reference = Reference::parse(reference)
            .ok_or_else(|| invalid(format!("unknown reference {reference}")))?;
        let alphas = alphas.unwrap_or_else(alphaspec::experiments::figure_alpha_grid);
        let (family, param) = match graph.family.as_deref() {
            Some(f) => (
                f.to_string(),
                id.strip_prefix(f)
                    .unwrap_or("")
                    .trim_start_matches('_')
                    .to_string(),
            ),
            None => (id, String::new()),
        };
        sweep_compare(&g, &family, &param, &ids, &alphas, reference)?
    };
    table.write_csv(out)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eigenvalue_text() {
        assert_eq!(eig_text(4.0), "4");
        assert_eq!(eig_text(1.4999999999999), "1.5");
        assert_eq!(eig_text(-1e-15), "0");
    }
}
