//! Deterministic report structures shared by the verification routines
//! and the command-line front end. JSON output follows the versioned
//! `polysym-report/1` envelope; TSV output mirrors table layouts.

use serde::Serialize;

pub const REPORT_SCHEMA: &str = "polysym-report/1";

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Failed,
    Skipped,
    Unsupported,
}

/// One verified (or failed) claim inside a table.
#[derive(Clone, Debug, Serialize)]
pub struct RowReport {
    pub label: String,
    pub multidegree: Vec<u32>,
    pub status: Status,
    pub detail: String,
}

/// Verification result for one published table.
#[derive(Clone, Debug, Serialize)]
pub struct TableReport {
    pub table: u8,
    pub rows: Vec<RowReport>,
    pub pass: bool,
}

impl TableReport {
    pub fn new(table: u8, rows: Vec<RowReport>) -> Self {
        let pass = rows.iter().all(|r| r.status != Status::Failed);
        TableReport { table, rows, pass }
    }

    pub fn render_tsv(&self) -> String {
        let mut out = String::from("multidegree\tlabel\tstatus\tdetail\n");
        for r in &self.rows {
            let md = r
                .multidegree
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",");
            out.push_str(&format!(
                "({})\t{}\t{}\t{}\n",
                md,
                r.label,
                match r.status {
                    Status::Verified => "verified",
                    Status::Failed => "failed",
                    Status::Skipped => "skipped",
                    Status::Unsupported => "unsupported",
                },
                r.detail
            ));
        }
        out
    }
}

/// Top-level report envelope written by the CLI.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    pub params: serde_json::Value,
    pub pass: bool,
    pub results: serde_json::Value,
}

impl Report {
    pub fn new(
        command: &str,
        params: serde_json::Value,
        pass: bool,
        results: serde_json::Value,
    ) -> Self {
        Report {
            schema: REPORT_SCHEMA,
            command: command.to_string(),
            params,
            pass,
            results,
        }
    }

    pub fn to_json_string(&self) -> String {
        let mut buf = serde_json::to_string_pretty(self).expect("serializable report");
        buf.push('\n');
        buf
    }
}
