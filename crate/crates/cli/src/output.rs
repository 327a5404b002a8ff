//! Text, JSON and CSV renderings.

use dpb_core::identities::{IdentityReport, LambdaMode, ReportParams, Status};
use serde::{Deserialize, Serialize};

use crate::Format;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub n: usize,
    pub value: String,
    /// `n!·[tⁿ]`, present for `eval`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sequence: Option<String>,
}

impl Row {
    pub fn new(n: usize, value: String) -> Self {
        Row {
            n,
            value,
            sequence: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub descriptor: String,
    pub k: Option<i32>,
    pub r: Option<u32>,
    pub lambda: LambdaMode,
    pub rows: Vec<Row>,
}

impl OutputRecord {
    pub fn render(&self, format: Format) -> String {
        let with_sequence = self.rows.iter().any(|r| r.sequence.is_some());
        match format {
            Format::Json => json(self),
            Format::Csv => {
                let mut out = String::from(if with_sequence {
                    "n,value,sequence\n"
                } else {
                    "n,value\n"
                });
                for row in &self.rows {
                    out += &format!("{},{}", row.n, row.value);
                    if let Some(s) = &row.sequence {
                        out += &format!(",{s}");
                    }
                    out.push('\n');
                }
                out
            }
            Format::Text => {
                let mut header = vec!["n", "value"];
                if with_sequence {
                    header = vec!["n", "[t^n]", "n![t^n]"];
                }
                let rows = self
                    .rows
                    .iter()
                    .map(|r| {
                        let mut cells = vec![r.n.to_string(), r.value.clone()];
                        cells.extend(r.sequence.clone());
                        cells
                    })
                    .collect::<Vec<_>>();
                columns(&header, &rows)
            }
        }
    }
}

/// Left-aligned columns separated by two spaces; the `n` column is
/// right-aligned.
fn columns(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let last = cells.len() - 1;
        let mut s = String::new();
        for (i, cell) in cells.into_iter().enumerate() {
            let pad = widths[i] - cell.chars().count();
            if i == 0 {
                s += &" ".repeat(pad);
                s += cell;
            } else {
                s += "  ";
                s += cell;
                if i != last {
                    s += &" ".repeat(pad);
                }
            }
        }
        s + "\n"
    };
    let mut out = line(header.to_vec());
    for row in rows {
        out += &line(row.iter().map(String::as_str).collect());
    }
    out
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("records serialize") + "\n"
}

pub fn render_reports(reports: &[IdentityReport], format: Format) -> String {
    match format {
        Format::Json if reports.len() == 1 => json(&reports[0]),
        Format::Json => json(&reports),
        Format::Csv => {
            let mut out = String::from("id,status,n,lhs,rhs\n");
            for r in reports {
                let (n, lhs, rhs) = r
                    .witness
                    .as_ref()
                    .map(|w| (w.n.to_string(), w.lhs.as_str(), w.rhs.as_str()))
                    .unwrap_or_default();
                out += &format!(
                    "\"{}\",{},{n},{lhs},{rhs}\n",
                    r.id.replace('"', "\"\""),
                    status(r.status)
                );
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            if let Some(r) = reports.first() {
                out += &describe(&r.params);
            }
            let width = reports
                .iter()
                .map(|r| r.id.chars().count())
                .max()
                .unwrap_or(0);
            for r in reports {
                out += &format!("{:<width$}  {}\n", r.id, status(r.status));
                if let Some(w) = &r.witness {
                    out += &format!(
                        "  first failure at n = {}\n    lhs: {}\n    rhs: {}\n",
                        w.n, w.lhs, w.rhs
                    );
                }
            }
            out
        }
    }
}

fn status(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
    }
}

fn describe(params: &ReportParams) -> String {
    match params {
        ReportParams::Catalog(p) => {
            let ys: Vec<String> = p.sampled_ys().iter().map(ToString::to_string).collect();
            format!(
                "k = {}, r = {}, n <= {}, lambda = {}, y in {{{}}}, seed = {}\n",
                p.k,
                p.r,
                p.n_max,
                p.lambda,
                ys.join(", "),
                p.seed
            )
        }
        ReportParams::Equation(p) => format!("order = {}, lambda = {}\n", p.order, p.lambda),
    }
}
