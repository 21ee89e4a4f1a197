//! Bound tables over α grids: the three lower-bound comparison tables and
//! free-form sweeps measuring how far each bound sits from an eigenvalue.

use std::io::Write;

use rayon::prelude::*;

use super::format::{figure_alpha_grid, format_plain, format_value, table_alpha_grid};
use crate::bounds::{BoundId, Side};
use crate::error::{Error, Result};
use crate::graph::{Family, Graph, LineGraph};
use crate::linalg::{a_alpha, spectrum};

/// One table cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Value(f64),
    /// The eigensolver did not converge.
    Failed(String),
    /// The bound is undefined for this graph (e.g. `n < 3`).
    Error(String),
}

impl Cell {
    pub fn value(&self) -> Option<f64> {
        match self {
            Cell::Value(v) => Some(*v),
            _ => None,
        }
    }

    fn from_result(r: Result<f64>) -> Cell {
        match r {
            Ok(v) => Cell::Value(v),
            Err(e) if e.is_numerical() => Cell::Failed(e.to_string()),
            Err(e) => Cell::Error(e.to_string()),
        }
    }

    fn text(&self, rounded: bool) -> String {
        match self {
            Cell::Value(v) if rounded => format_value(*v),
            Cell::Value(v) => format_plain(*v),
            Cell::Failed(_) => "failed".into(),
            Cell::Error(_) => "error".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub family: String,
    pub param: String,
    pub quantity: String,
    /// One cell per grid point.
    pub cells: Vec<Cell>,
}

/// Values keyed by `(family, param, quantity)` over a shared α grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepTable {
    pub alphas: Vec<f64>,
    pub rows: Vec<SweepRow>,
    /// Round values to five decimals when writing.
    pub rounded: bool,
}

impl SweepTable {
    pub fn row(&self, family: &str, param: &str, quantity: &str) -> Option<&SweepRow> {
        self.rows
            .iter()
            .find(|r| r.family == family && r.param == param && r.quantity == quantity)
    }

    /// Cell at grid point `alpha` (matched to 1e−12).
    pub fn get(&self, family: &str, param: &str, quantity: &str, alpha: f64) -> Option<&Cell> {
        let k = self.alphas.iter().position(|a| (a - alpha).abs() < 1e-12)?;
        self.row(family, param, quantity).map(|r| &r.cells[k])
    }

    /// `family,param,quantity,alpha,value`, one line per cell.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(out);
        w.write_record(["family", "param", "quantity", "alpha", "value"])?;
        for row in &self.rows {
            for (a, cell) in self.alphas.iter().zip(&row.cells) {
                w.write_record([
                    row.family.as_str(),
                    row.param.as_str(),
                    row.quantity.as_str(),
                    &format_plain(*a),
                    &cell.text(self.rounded),
                ])?;
            }
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("CSV is UTF-8")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableId {
    /// Paths `P_n`, `n ∈ {100, 500, 1000}`.
    Paths,
    /// Binomial trees `BT_k`, `k ∈ {7, 9, 10}`.
    BinomialTrees,
    /// Pineapples `K_p^1`, `p ∈ {99, 499, 999}`.
    Pineapples,
}

impl TableId {
    pub fn from_number(which: u8) -> Result<TableId> {
        match which {
            1 => Ok(TableId::Paths),
            2 => Ok(TableId::BinomialTrees),
            3 => Ok(TableId::Pineapples),
            _ => Err(Error::InvalidArgument(format!(
                "table {which} does not exist (1, 2 or 3)"
            ))),
        }
    }

    pub fn families(self) -> Vec<Family> {
        match self {
            TableId::Paths => [100, 500, 1000].map(Family::Path).to_vec(),
            TableId::BinomialTrees => [7, 9, 10].map(Family::BinomialTree).to_vec(),
            TableId::Pineapples => [99, 499, 999].map(|p| Family::Pineapple(p, 1)).to_vec(),
        }
    }
}

/// Reference eigenvalue a sweep measures bounds against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reference {
    Lambda1,
    LambdaMin,
    LineLambda1,
    LineLambdaMin,
}

impl Reference {
    pub fn tag(self) -> &'static str {
        match self {
            Reference::Lambda1 => "lambda1",
            Reference::LambdaMin => "lambda_min",
            Reference::LineLambda1 => "line_lambda1",
            Reference::LineLambdaMin => "line_lambda_min",
        }
    }

    pub fn parse(tag: &str) -> Option<Reference> {
        [
            Reference::Lambda1,
            Reference::LambdaMin,
            Reference::LineLambda1,
            Reference::LineLambdaMin,
        ]
        .into_iter()
        .find(|r| r.tag() == tag)
    }

    fn eval(self, g: &Graph, alpha: f64) -> Result<f64> {
        let s = match self {
            Reference::Lambda1 | Reference::LambdaMin => spectrum(&a_alpha(g, alpha)?)?,
            Reference::LineLambda1 | Reference::LineLambdaMin => {
                spectrum(&a_alpha(&LineGraph::of(g)?.graph, alpha)?)?
            }
        };
        Ok(match self {
            Reference::Lambda1 | Reference::LineLambda1 => s.lambda1(),
            _ => s.lambda_min(),
        })
    }
}

/// λ₁, the degree-based bound and the Zagreb–Randić bound for each graph of
/// the chosen table over `α = 0.0, …, 0.9`. A solver failure marks its cells
/// `failed`; the rest of the table is still produced.
pub fn reproduce_table(which: TableId) -> SweepTable {
    let alphas = table_alpha_grid();
    let families = which.families();
    let jobs: Vec<(usize, f64)> = (0..families.len())
        .flat_map(|i| alphas.iter().map(move |&a| (i, a)))
        .collect();
    let graphs: Vec<Graph> = families
        .iter()
        .map(|f| f.build().expect("table families are valid"))
        .collect();
    let cells: Vec<[Cell; 3]> = jobs
        .par_iter()
        .map(|&(i, a)| {
            let g = &graphs[i];
            let l1 = a_alpha(g, a)
                .and_then(|m| spectrum(&m))
                .map(|s| s.lambda1());
            [
                Cell::from_result(l1),
                Cell::from_result(BoundId::DegreeBased.evaluate(g, a, f64::NAN)),
                Cell::from_result(BoundId::ZagrebRandic.evaluate(g, a, f64::NAN)),
            ]
        })
        .collect();

    let mut rows = Vec::new();
    for (i, fam) in families.iter().enumerate() {
        for (q, name) in ["lambda1", "eq10", "eq12"].iter().enumerate() {
            rows.push(SweepRow {
                family: fam.tag().to_string(),
                param: fam.param_string(),
                quantity: name.to_string(),
                cells: (0..alphas.len())
                    .map(|k| cells[i * alphas.len() + k][q].clone())
                    .collect(),
            });
        }
    }
    SweepTable {
        alphas,
        rows,
        rounded: true,
    }
}

/// For each α: the reference eigenvalue (row named after the reference),
/// each bound's value (row named by its tag) and its slack (row
/// `<tag>_diff`), where slack is `reference − bound` for lower bounds and
/// `bound − reference` for upper bounds.
pub fn sweep_compare(
    g: &Graph,
    family: &str,
    param: &str,
    bounds: &[BoundId],
    alphas: &[f64],
    reference: Reference,
) -> Result<SweepTable> {
    if alphas.is_empty() {
        return Err(Error::InvalidArgument("empty alpha grid".into()));
    }
    if alphas.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument(
            "alpha grid must be strictly increasing".into(),
        ));
    }
    let per_alpha: Vec<(Cell, Vec<(Cell, Cell)>)> = alphas
        .par_iter()
        .map(|&a| {
            let r = reference.eval(g, a);
            let lambda1 = if bounds.contains(&BoundId::LineSandwichLower)
                || bounds.contains(&BoundId::LineSandwichUpper)
            {
                Reference::Lambda1.eval(g, a).unwrap_or(f64::NAN)
            } else {
                f64::NAN
            };
            let entries = bounds
                .iter()
                .map(|&b| {
                    let v = b.evaluate(g, a, lambda1);
                    let diff = match (&v, &r) {
                        (Ok(v), Ok(r)) => Ok(match b.side() {
                            Side::Lower => r - v,
                            Side::Upper => v - r,
                        }),
                        (Err(e), _) | (_, Err(e)) => Err(e.clone()),
                    };
                    (Cell::from_result(v), Cell::from_result(diff))
                })
                .collect();
            (Cell::from_result(r), entries)
        })
        .collect();

    let mk = |quantity: String, cells: Vec<Cell>| SweepRow {
        family: family.to_string(),
        param: param.to_string(),
        quantity,
        cells,
    };
    let mut rows = vec![mk(
        reference.tag().to_string(),
        per_alpha.iter().map(|p| p.0.clone()).collect(),
    )];
    for (j, b) in bounds.iter().enumerate() {
        rows.push(mk(
            b.tag().to_string(),
            per_alpha.iter().map(|p| p.1[j].0.clone()).collect(),
        ));
        rows.push(mk(
            format!("{}_diff", b.tag()),
            per_alpha.iter().map(|p| p.1[j].1.clone()).collect(),
        ));
    }
    Ok(SweepTable {
        alphas: alphas.to_vec(),
        rows,
        rounded: false,
    })
}

/// Preset comparisons: `3` degree-based vs Nikiforov on wheels, `4`
/// row-sum lower vs Zagreb–Randić on stars, `5` the same pair on wheels.
/// Sizes are `n ∈ {10, 50, 100}` for all three.
pub fn figure_preset(which: u8) -> Result<(Vec<Family>, Vec<BoundId>)> {
    let sizes = [10usize, 50, 100];
    Ok(match which {
        3 => (
            sizes.map(Family::Wheel).to_vec(),
            vec![BoundId::DegreeBased, BoundId::Nikiforov],
        ),
        4 => (
            sizes.map(Family::Star).to_vec(),
            vec![BoundId::ZagrebRandic, BoundId::RowSumLower],
        ),
        5 => (
            sizes.map(Family::Wheel).to_vec(),
            vec![BoundId::ZagrebRandic, BoundId::RowSumLower],
        ),
        _ => {
            return Err(Error::InvalidArgument(format!(
                "figure preset {which} does not exist (3, 4 or 5)"
            )))
        }
    })
}

/// Runs a [`figure_preset`] over `alphas` (default `0.0, 0.05, …, 1.0`) and
/// stacks the per-graph tables.
pub fn figure_sweep(which: u8, alphas: Option<&[f64]>) -> Result<SweepTable> {
    let (families, bounds) = figure_preset(which)?;
    let grid = alphas
        .map(<[f64]>::to_vec)
        .unwrap_or_else(figure_alpha_grid);
    let mut rows = Vec::new();
    for fam in families {
        let g = fam.build()?;
        let t = sweep_compare(
            &g,
            fam.tag(),
            &fam.param_string(),
            &bounds,
            &grid,
            Reference::Lambda1,
        )?;
        rows.extend(t.rows);
    }
    Ok(SweepTable {
        alphas: grid,
        rows,
        rounded: false,
    })
}
