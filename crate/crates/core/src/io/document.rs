use serde::{Deserialize, Serialize};

use crate::algebra::rational::{format_rational, parse_rational};
use crate::algebra::Point;
use crate::nodeset::NodeSet;
use crate::Error;

/// JSON form of a node set. Coordinates are exact rationals written as strings.
///
/// ```json
/// {"degree":1,"nodes":[["0","0"],["1","0"],["0","1/3"]]}
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NodeSetDocument {
    pub degree: usize,
    pub nodes: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    /// Index of a distinguished node `B`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distinguished: Option<usize>,
}

impl NodeSetDocument {
    pub fn from_set(x: &NodeSet) -> Self {
        let nodes = x.nodes().iter().map(|p| [format_rational(&p.x), format_rational(&p.y)]).collect();
        NodeSetDocument { degree: x.degree(), nodes, labels: None, distinguished: None }
    }

    pub fn with_distinguished(mut self, distinguished: Option<usize>) -> Self {
        self.distinguished = distinguished;
        self
    }

    /// Parses the coordinates and checks labels and the distinguished index.
    pub fn to_set(&self) -> Result<NodeSet, Error> {
        let nodes = self
            .nodes
            .iter()
            .map(|[x, y]| Ok(Point::new(parse_rational(x)?, parse_rational(y)?)))
            .collect::<Result<Vec<_>, Error>>()?;
        if let Some(labels) = &self.labels {
            if labels.len() != nodes.len() {
                return Err(Error::Document(format!("{} labels for {} nodes", labels.len(), nodes.len())));
            }
        }
        if let Some(d) = self.distinguished {
            if d >= nodes.len() {
                return Err(Error::IndexOutOfRange { index: d, len: nodes.len() });
            }
        }
        NodeSet::new(self.degree, nodes)
    }

    pub fn from_json(text: &str) -> Result<Self, Error> {
        serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn to_compact_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

/// A parsed document together with its node set and any non-fatal warnings.
#[derive(Clone, Debug)]
pub struct LoadedSet {
    pub set: NodeSet,
    pub document: NodeSetDocument,
    pub warnings: Vec<String>,
}

/// Strict parse. A node count different from `(n+1)(n+2)/2` is only a warning, so
/// non-correct sets stay loadable for analysis.
pub fn parse_nodeset(text: &str) -> Result<LoadedSet, Error> {
    let document = NodeSetDocument::from_json(text)?;
    let set = document.to_set()?;
    let mut warnings = Vec::new();
    if set.len() != set.expected_len() {
        warnings.push(format!(
            "degree {} expects {} nodes, document has {}",
            set.degree(),
            set.expected_len(),
            set.len()
        ));
    }
    Ok(LoadedSet { set, document, warnings })
}

pub fn serialize_nodeset(document: &NodeSetDocument) -> String {
    document.to_json()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::ratio;

    #[test]
    fn parses_unit_triangle() {
        let loaded = parse_nodeset(r#"{"degree":1,"nodes":[["0","0"],["1","0"],["0","1"]]}"#).unwrap();
        assert_eq!(loaded.set.len(), 3);
        assert!(loaded.warnings.is_empty());
        assert_eq!(loaded.set.node(2), &Point::from_ints(0, 1));
    }

    #[test]
    fn exact_fraction() {
        let loaded = parse_nodeset(r#"{"degree":0,"nodes":[["1/3","-2"]]}"#).unwrap();
        assert_eq!(loaded.set.node(0).x, ratio(1, 3));
    }

    #[test]
    fn rejections() {
        let dup = parse_nodeset(r#"{"degree":1,"nodes":[["0","0"],["0","0"],["0","1"]]}"#);
        assert!(matches!(dup, Err(Error::DuplicateNode(_))));
        let bad = parse_nodeset(r#"{"degree":1,"nodes":[["0.5","0"]]}"#);
        assert!(matches!(bad, Err(Error::MalformedRational(_))));
        let labels = parse_nodeset(r#"{"degree":0,"nodes":[["0","0"]],"labels":["a","b"]}"#);
        assert!(matches!(labels, Err(Error::Document(_))));
        let dist = parse_nodeset(r#"{"degree":0,"nodes":[["0","0"]],"distinguished":1}"#);
        assert!(matches!(dist, Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(parse_nodeset("{"), Err(Error::Document(_))));
        assert!(matches!(parse_nodeset(r#"{"degree":0,"nodes":[],"extra":1}"#), Err(Error::Document(_))));
    }

    #[test]
    fn count_mismatch_is_a_warning() {
        let loaded = parse_nodeset(r#"{"degree":2,"nodes":[["0","0"],["1","0"],["0","1"]]}"#).unwrap();
        assert_eq!(loaded.warnings.len(), 1);
    }

    #[test]
    fn round_trip_preserves_fields() {
        let doc = NodeSetDocument {
            degree: 1,
            nodes: vec![["0".into(), "0".into()], ["1/2".into(), "0".into()], ["0".into(), "-3".into()]],
            labels: Some(vec!["B".into(), "A".into(), "C".into()]),
            distinguished: Some(0),
        };
        let text = serialize_nodeset(&doc);
        assert_eq!(parse_nodeset(&text).unwrap().document, doc);
        assert_eq!(NodeSetDocument::from_json(&doc.to_compact_json()).unwrap(), doc);
    }
}
