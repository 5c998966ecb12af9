//! Human-first text rendering of sweep reports: aligned columns, a
//! per-check summary footer, and an explicit anomaly section. JSON is the
//! machine contract; everything here is for eyes.

use std::collections::BTreeMap;

use fibcheck_core::registry::{CheckResult, Report, Verdict};

fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "PASS",
        Verdict::Fail => "FAIL",
        Verdict::Skipped => "SKIPPED",
    }
}

fn compact_map<K: std::fmt::Display, V: std::fmt::Display>(map: &BTreeMap<K, V>) -> String {
    map.iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn detail(result: &CheckResult) -> String {
    let mut parts = Vec::new();
    if !result.params.is_empty() {
        parts.push(compact_map(&result.params));
    }
    if let Some(w) = &result.witness {
        parts.push(compact_map(w));
    }
    parts.join(" | ")
}

pub fn text_report(report: &Report) -> String {
    let mut rows: Vec<[String; 4]> = Vec::with_capacity(report.results.len() + 1);
    rows.push([
        "check".into(),
        "modulus".into(),
        "verdict".into(),
        "detail".into(),
    ]);
    for r in &report.results {
        let modulus = if r.modulus == 0 {
            "-".to_string()
        } else {
            r.modulus.to_string()
        };
        rows.push([
            r.check.clone(),
            modulus,
            verdict_str(r.verdict).into(),
            detail(r),
        ]);
    }
    let mut width = [0usize; 3];
    for row in &rows {
        for (i, w) in width.iter_mut().enumerate() {
            *w = (*w).max(row[i].len());
        }
    }

    let mut out = String::new();
    out.push_str(&format!(
        "sweep bound {} | {} checks | {} results\n\n",
        report.bound,
        report.filter.len(),
        report.results.len()
    ));
    for row in &rows {
        out.push_str(&format!(
            "{:<w0$}  {:>w1$}  {:<w2$}  {}\n",
            row[0],
            row[1],
            row[2],
            row[3],
            w0 = width[0],
            w1 = width[1],
            w2 = width[2],
        ));
    }

    out.push_str("\nsummary:\n");
    let id_width = report
        .summary
        .keys()
        .map(|k| k.len())
        .max()
        .unwrap_or(0);
    for (id, tally) in &report.summary {
        out.push_str(&format!(
            "  {:<idw$}  pass {:>5}  fail {:>3}  skipped {:>3}\n",
            id,
            tally.pass,
            tally.fail,
            tally.skipped,
            idw = id_width,
        ));
    }

    if report.anomalies.is_empty() {
        out.push_str("\nanomalies: none\n");
    } else {
        out.push_str(&format!("\nanomalies: {}\n", report.anomalies.len()));
        for r in &report.anomalies {
            out.push_str(&format!(
                "  {} modulus {} -> {} ({})\n",
                r.check,
                r.modulus,
                verdict_str(r.verdict),
                detail(r)
            ));
        }
    }
    out
}
