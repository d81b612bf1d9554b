//! Deterministic check reports: JSON (schema-stable, machine-diffable)
//! and markdown (grouped by module, with the anchor text recorded for
//! every check). Wall-clock timings are collected but excluded from the
//! default output so repeated runs are byte-identical.

use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Clone, Debug)]
pub struct CheckRecord {
    pub check: String,
    pub module: String,
    pub anchor: String,
    pub status: Status,
    pub detail: Value,
    pub wall_ms: u128,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub scenario: String,
    pub records: Vec<CheckRecord>,
}

impl Report {
    pub fn new(scenario: &str, mut records: Vec<CheckRecord>) -> Self {
        records.sort_by(|a, b| a.check.cmp(&b.check));
        Report {
            scenario: scenario.to_string(),
            records,
        }
    }

    pub fn overall(&self) -> Status {
        if self.records.iter().all(|r| r.status == Status::Pass) {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn to_json(&self, include_timings: bool) -> Value {
        let records: Vec<Value> = self
            .records
            .iter()
            .map(|r| {
                let mut v = json!({
                    "check": r.check,
                    "module": r.module,
                    "anchor": r.anchor,
                    "status": r.status,
                    "detail": r.detail,
                });
                if include_timings {
                    v["wall_ms"] = json!(r.wall_ms);
                }
                v
            })
            .collect();
        json!({
            "scenario": self.scenario,
            "overall": self.overall(),
            "checks_total": self.records.len(),
            "checks_failed": self
                .records
                .iter()
                .filter(|r| r.status != Status::Pass)
                .count(),
            "records": records,
        })
    }

    pub fn to_markdown(&self, include_timings: bool) -> String {
        let mut out = String::new();
        out.push_str(&format!("# Report: {}\n\n", self.scenario));
        out.push_str(&format!(
            "Overall: **{}** ({} checks, {} failed)\n",
            status_word(self.overall()),
            self.records.len(),
            self.records
                .iter()
                .filter(|r| r.status != Status::Pass)
                .count()
        ));
        let mut modules: Vec<&str> = self.records.iter().map(|r| r.module.as_str()).collect();
        modules.dedup();
        let mut seen = std::collections::BTreeSet::new();
        for m in modules {
            if !seen.insert(m) {
                continue;
            }
            out.push_str(&format!("\n## {m}\n\n"));
            for r in self.records.iter().filter(|r| r.module == m) {
                out.push_str(&format!(
                    "- `{}` — **{}**\n  - anchor: {}\n",
                    r.check,
                    status_word(r.status),
                    r.anchor
                ));
                if r.status != Status::Pass {
                    out.push_str(&format!(
                        "  - detail: `{}`\n",
                        serde_json::to_string(&r.detail).unwrap_or_default()
                    ));
                }
                if include_timings {
                    out.push_str(&format!("  - wall: {} ms\n", r.wall_ms));
                }
            }
        }
        out
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
        Status::Inconclusive => "inconclusive",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_json() {
        let rec = CheckRecord {
            check: "m/x".into(),
            module: "m".into(),
            anchor: "anchor text".into(),
            status: Status::Pass,
            detail: json!({"b": 1, "a": 2}),
            wall_ms: 17,
        };
        let r = Report::new("t", vec![rec]);
        let a = serde_json::to_string_pretty(&r.to_json(false)).unwrap();
        let b = serde_json::to_string_pretty(&r.to_json(false)).unwrap();
        assert_eq!(a, b);
        assert!(!a.contains("wall_ms"));
        assert!(r.to_json(true).to_string().contains("wall_ms"));
        let md = r.to_markdown(false);
        assert!(md.contains("anchor text"));
    }

    #[test]
    fn overall_fails_when_any_check_fails() {
        let ok = CheckRecord {
            check: "a".into(),
            module: "m".into(),
            anchor: String::new(),
            status: Status::Pass,
            detail: Value::Null,
            wall_ms: 0,
        };
        let mut bad = ok.clone();
        bad.check = "b".into();
        bad.status = Status::Fail;
        let r = Report::new("t", vec![ok, bad]);
        assert_eq!(r.overall(), Status::Fail);
    }
}
