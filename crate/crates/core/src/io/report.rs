use std::fmt::Write;

use crate::harness::VerificationReport;

/// One line per report:
///
/// ```text
/// CLAIM <id> <pass|fail|vacuous> [<target>] <detail>
/// ```
///
/// A failure is followed by an indented witness block holding the compact JSON document
/// of the set and the offending objects.
pub fn serialize_report(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    for r in reports {
        writeln!(out, "CLAIM {} {} [{}] {}", r.claim_id, r.status, r.target, r.detail).expect("string write");
        if let Some(w) = &r.witness {
            writeln!(out, "    set: {}", w.set.to_compact_json()).expect("string write");
            for o in &w.objects {
                writeln!(out, "    object: {o}").expect("string write");
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::{Status, Witness};
    use crate::io::NodeSetDocument;

    fn report(status: Status) -> VerificationReport {
        VerificationReport {
            claim_id: "max-lines.count".into(),
            target: "t".into(),
            status,
            detail: "3 checks".into(),
            witness: (status == Status::Fail).then(|| Witness {
                set: NodeSetDocument { degree: 0, nodes: vec![["0".into(), "0".into()]], labels: None, distinguished: None },
                objects: vec!["x = 0".into()],
            }),
        }
    }

    #[test]
    fn empty_report_is_empty() {
        assert_eq!(serialize_report(&[]), "");
    }

    #[test]
    fn passing_reports_have_no_fail_token() {
        let text = serialize_report(&[report(Status::Pass), report(Status::Vacuous)]);
        assert!(!text.contains("fail"));
        assert_eq!(text.lines().count(), 2);
        assert!(text.starts_with("CLAIM max-lines.count pass [t] 3 checks\n"));
    }

    #[test]
    fn single_failure_has_one_witness_block() {
        let text = serialize_report(&[report(Status::Pass), report(Status::Fail)]);
        assert_eq!(text.matches("    set: ").count(), 1);
        assert!(text.contains("    object: x = 0"));
    }
}
