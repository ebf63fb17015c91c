//! The `(k, s)` grid: composition sum against the Gaussian binomial and the
//! series coefficient.

use serde::Serialize;
use taft_core::qcombinat::{beta_coefficients, composition_sum, default_truncation, gaussian_binomial};
use taft_core::CycContext;

use crate::config::Format;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub root_exponent: usize,
    pub k: usize,
    pub s: usize,
    pub lhs: String,
    pub rhs_qbinom: String,
    pub rhs_series: String,
    pub pass: bool,
}

/// Rows for `0 <= k, s < n`, `k` outer. Values are rendered with `symbol`
/// standing for `w`.
pub fn identity_rows(ctx: &CycContext, symbol: &str) -> Vec<TableRow> {
    let n = ctx.order();
    let series: Vec<_> = (0..n).map(|s| beta_coefficients(ctx, s, default_truncation(n))).collect();
    let mut rows = Vec::with_capacity(n * n);
    for k in 0..n {
        for s in 0..n {
            let lhs = composition_sum(ctx, k, s);
            let qb = gaussian_binomial(ctx, k + s, k as i64);
            let ser = &series[s][k];
            rows.push(TableRow {
                n,
                root_exponent: ctx.root_exponent(),
                k,
                s,
                pass: lhs == qb && &lhs == ser,
                lhs: lhs.render(symbol),
                rhs_qbinom: qb.render(symbol),
                rhs_series: ser.render(symbol),
            });
        }
    }
    rows
}

/// Renders grids for several contexts. CSV uses `w` for the root and has
/// the columns `n,k,s,lhs,rhs_qbinom,rhs_series,pass`, with `root_exponent`
/// after `n` when `with_root` is set.
pub fn emit_identity_table(contexts: &[CycContext], format: Format, with_root: bool) -> (String, bool) {
    let symbol = if format == Format::Csv { "w" } else { "ω" };
    let rows: Vec<TableRow> = contexts.iter().flat_map(|c| identity_rows(c, symbol)).collect();
    let pass = rows.iter().all(|r| r.pass);
    let text = match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&rows).expect("rows serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let mut header = vec!["n"];
            if with_root {
                header.push("root_exponent");
            }
            header.extend(["k", "s", "lhs", "rhs_qbinom", "rhs_series", "pass"]);
            w.write_record(&header).expect("in-memory write");
            for r in &rows {
                let mut rec = vec![r.n.to_string()];
                if with_root {
                    rec.push(r.root_exponent.to_string());
                }
                rec.extend([
                    r.k.to_string(),
                    r.s.to_string(),
                    r.lhs.clone(),
                    r.rhs_qbinom.clone(),
                    r.rhs_series.clone(),
                    r.pass.to_string(),
                ]);
                w.write_record(&rec).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
        }
        Format::Text => {
            let widths = |f: fn(&TableRow) -> &str| rows.iter().map(|r| f(r).chars().count()).max().unwrap_or(0);
            let wl = widths(|r| &r.lhs).max(3);
            let wq = widths(|r| &r.rhs_qbinom).max(10);
            let ws = widths(|r| &r.rhs_series).max(10);
            let mut out = String::new();
            out.push_str(&format!(
                "{:>3} {:>3} {:>3} {:>3}  {:<wl$}  {:<wq$}  {:<ws$}  pass\n",
                "n", "t", "k", "s", "lhs", "rhs_qbinom", "rhs_series"
            ));
            for r in &rows {
                out.push_str(&format!(
                    "{:>3} {:>3} {:>3} {:>3}  {:<wl$}  {:<wq$}  {:<ws$}  {}\n",
                    r.n, r.root_exponent, r.k, r.s, r.lhs, r.rhs_qbinom, r.rhs_series, r.pass
                ));
            }
            out
        }
    };
    (text, pass)
}
