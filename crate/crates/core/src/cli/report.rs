use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::ValueEnum;
use serde::Serialize;

use super::suites::CheckOutcome;
use crate::algebra::KPolynomial;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
    Markdown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GridCell {
    pub family: String,
    pub series: String,
    pub n: u32,
    pub k: u32,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolyEntry {
    pub family: String,
    pub target: String,
    pub n: u32,
    pub variable: &'static str,
    /// ascending degree, exact rationals
    pub coefficients: Vec<String>,
    pub factored: String,
    pub expanded: String,
}

impl PolyEntry {
    pub fn new(family: impl Into<String>, target: impl Into<String>, n: u32, poly: &KPolynomial) -> Self {
        Self {
            family: family.into(),
            target: target.into(),
            n,
            variable: "k",
            coefficients: poly.coeff_strings(),
            factored: poly.factored(),
            expanded: poly.to_string(),
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub command: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub grid: Vec<GridCell>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub polynomials: Vec<PolyEntry>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<CheckOutcome>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Csv => self.render_csv(),
            Format::Text => self.render_text(false),
            Format::Markdown => self.render_text(true),
        }
    }

    fn render_csv(&self) -> String {
        let mut s = String::new();
        if !self.grid.is_empty() {
            s.push_str("family,series,n,k,value\n");
            for c in &self.grid {
                let _ = writeln!(s, "{},{},{},{},{}", c.family, c.series, c.n, c.k, csv_field(&c.value));
            }
        }
        if !self.polynomials.is_empty() {
            s.push_str("family,target,n,coefficients,factored\n");
            for p in &self.polynomials {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{}",
                    p.family,
                    p.target,
                    p.n,
                    csv_field(&p.coefficients.join(" ")),
                    csv_field(&p.factored)
                );
            }
        }
        if !self.checks.is_empty() {
            s.push_str("name,passed,detail\n");
            for c in &self.checks {
                let _ = writeln!(s, "{},{},{}", csv_field(&c.name), c.passed, csv_field(&c.detail));
            }
        }
        s
    }

    fn render_text(&self, markdown: bool) -> String {
        let mut s = String::new();
        let mut groups: BTreeMap<(String, String), Vec<&GridCell>> = BTreeMap::new();
        for c in &self.grid {
            groups.entry((c.series.clone(), c.family.clone())).or_default().push(c);
        }
        for ((series, family), cells) in groups {
            let mut ns: Vec<u32> = cells.iter().map(|c| c.n).collect();
            let mut ks: Vec<u32> = cells.iter().map(|c| c.k).collect();
            ns.sort_unstable();
            ns.dedup();
            ks.sort_unstable();
            ks.dedup();
            let lookup: BTreeMap<(u32, u32), &str> = cells.iter().map(|c| ((c.k, c.n), c.value.as_str())).collect();
            let header: Vec<String> = std::iter::once("k\\n".to_string()).chain(ns.iter().map(u32::to_string)).collect();
            let rows: Vec<Vec<String>> = ks
                .iter()
                .map(|&k| {
                    std::iter::once(k.to_string())
                        .chain(ns.iter().map(|&n| lookup.get(&(k, n)).map_or_else(String::new, |v| v.to_string())))
                        .collect()
                })
                .collect();
            if markdown {
                let _ = writeln!(s, "### {series}, family {family}\n");
            } else {
                let _ = writeln!(s, "{series}_{{n,k,{family}}}");
            }
            s.push_str(&table(&header, &rows, markdown));
            s.push('\n');
        }
        for p in &self.polynomials {
            if markdown {
                let _ = writeln!(s, "- `{}_{{{},k,{}}} = {}`", p.target, p.n, p.family, p.factored);
            } else {
                let _ = writeln!(s, "{}_{{{},k,{}}} = {}", p.target, p.n, p.family, p.factored);
                let _ = writeln!(s, "    = {}", p.expanded);
            }
        }
        if !self.checks.is_empty() {
            if markdown {
                s.push_str("| result | check | detail |\n|---|---|---|\n");
            }
            for c in &self.checks {
                let tag = if c.passed { "PASS" } else { "FAIL" };
                if markdown {
                    let _ = writeln!(s, "| {tag} | {} | {} |", c.name, c.detail);
                } else {
                    let _ = writeln!(s, "{tag} {}: {}", c.name, c.detail);
                }
            }
            let passed = self.checks.iter().filter(|c| c.passed).count();
            let _ = writeln!(s, "\n{passed} of {} checks passed", self.checks.len());
        }
        s
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn table(header: &[String], rows: &[Vec<String>], markdown: bool) -> String {
    let widths: Vec<usize> = (0..header.len())
        .map(|j| {
            rows.iter()
                .map(|r| r[j].len())
                .chain(std::iter::once(header[j].len()))
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |cells: &[String]| -> String {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        if markdown {
            format!("| {} |\n", padded.join(" | "))
        } else {
            format!("{}\n", padded.join("  ").trim_end())
        }
    };
    let mut s = line(header);
    if markdown {
        let dashes: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
        s.push_str(&format!("|-{}-|\n", dashes.join("-|-")));
    }
    for r in rows {
        s.push_str(&line(r));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("1 + x"), "1 + x");
    }

    #[test]
    fn text_grid() {
        let r = Report {
            command: "table".into(),
            grid: vec![
                GridCell { family: "r".into(), series: "A".into(), n: 1, k: 2, value: "2".into() },
                GridCell { family: "r".into(), series: "A".into(), n: 2, k: 2, value: "6".into() },
            ],
            ..Report::default()
        };
        let s = r.render(Format::Text);
        assert!(s.contains("A_{n,k,r}"));
        assert!(s.lines().any(|l| l.trim() == "2  2  6"));
    }
}
