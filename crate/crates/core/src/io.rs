//! Topology files.
//!
//! ```json
//! {"points": 2, "opens": [[], [0], [0, 1]]}
//! {"points": 2, "preorder": [[1, 0], [1, 1]]}
//! ```
//!
//! Exactly one of `opens` and `preorder` is present. Inner lists of `opens`
//! are strictly ascending point indices; `preorder[x][y] = 1` means `y` is
//! in every open set containing `x`.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::TopologyError;
use crate::point_set::{PointSet, MAX_POINTS};
use crate::topology::Topology;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TopologyFile {
    pub points: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub opens: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preorder: Option<Vec<Vec<u8>>>,
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("schema error: {0}")]
    Schema(String),
    #[error(transparent)]
    Topology(#[from] TopologyError),
}

impl TopologyFile {
    pub fn from_topology(t: &Topology) -> Self {
        TopologyFile {
            points: t.points(),
            opens: Some(t.open_sets().map(|s| s.points().collect()).collect()),
            preorder: None,
        }
    }

    pub fn to_topology(&self) -> Result<Topology, LoadError> {
        let n = self.points;
        if n > MAX_POINTS {
            return Err(LoadError::Schema(format!("points = {n} exceeds the limit of {MAX_POINTS}")));
        }
        match (&self.opens, &self.preorder) {
            (Some(opens), None) => {
                let mut family = Vec::with_capacity(opens.len());
                for (i, list) in opens.iter().enumerate() {
                    if let Some(&p) = list.iter().find(|&&p| p >= n) {
                        return Err(LoadError::Schema(format!("opens[{i}]: point {p} is not below {n}")));
                    }
                    if list.windows(2).any(|w| w[0] >= w[1]) {
                        return Err(LoadError::Schema(format!(
                            "opens[{i}]: indices must be strictly ascending"
                        )));
                    }
                    family.push(PointSet::from_points(n, list.iter().copied())?);
                }
                Ok(Topology::from_opens(n, family)?)
            }
            (None, Some(matrix)) => {
                if matrix.len() != n || matrix.iter().any(|row| row.len() != n) {
                    return Err(LoadError::Schema(format!("preorder must be a {n}x{n} matrix")));
                }
                if matrix.iter().flatten().any(|&v| v > 1) {
                    return Err(LoadError::Schema("preorder entries must be 0 or 1".to_owned()));
                }
                let rows: Vec<Vec<bool>> = matrix.iter().map(|r| r.iter().map(|&v| v == 1).collect()).collect();
                Ok(Topology::from_preorder(n, &rows)?)
            }
            (Some(_), Some(_)) => Err(LoadError::Schema("give either `opens` or `preorder`, not both".to_owned())),
            (None, None) => Err(LoadError::Schema("one of `opens` or `preorder` is required".to_owned())),
        }
    }
}

pub fn parse_topology(text: &str) -> Result<Topology, LoadError> {
    let file: TopologyFile = serde_json::from_str(text).map_err(|e| LoadError::Schema(e.to_string()))?;
    file.to_topology()
}

pub fn load_topology(path: impl AsRef<Path>) -> Result<Topology, LoadError> {
    let path = path.as_ref();
    let text =
        fs::read_to_string(path).map_err(|source| LoadError::Io { path: path.display().to_string(), source })?;
    parse_topology(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Violation;

    #[test]
    fn sierpinski_from_opens_and_preorder() {
        let a = parse_topology(r#"{"points":2,"opens":[[],[0],[0,1]]}"#).unwrap();
        let b = parse_topology(r#"{"points":2,"preorder":[[1,0],[1,1]]}"#).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.open_masks(), &[0, 1, 3]);
    }

    #[test]
    fn validation_errors_surface() {
        let err = parse_topology(r#"{"points":2,"opens":[[],[0],[1]]}"#).unwrap_err();
        let LoadError::Topology(TopologyError::InvalidFamily(v)) = err else { panic!("{err}") };
        assert!(v.iter().any(|x| matches!(x, Violation::MissingEmptyOrFull { .. })));
        assert!(v.iter().any(|x| matches!(x, Violation::NotClosedUnderUnion(..))));
    }

    #[test]
    fn schema_errors() {
        for bad in [
            r#"{"points":2}"#,
            r#"{"points":2,"opens":[[],[0,1]],"preorder":[[1,0],[0,1]]}"#,
            r#"{"points":2,"opens":[[],[1,0]]}"#,
            r#"{"points":2,"opens":[[],[0,0,1]]}"#,
            r#"{"points":2,"opens":[[],[0,2]]}"#,
            r#"{"points":2,"preorder":[[1,0]]}"#,
            r#"{"points":2,"preorder":[[1,2],[0,1]]}"#,
            r#"{"points":2,"opens":[[]],"extra":1}"#,
            r#"{"points":17,"opens":[[]]}"#,
            r#"not json"#,
        ] {
            assert!(matches!(parse_topology(bad), Err(LoadError::Schema(_))), "{bad}");
        }
    }

    #[test]
    fn preorder_errors_surface() {
        let err = parse_topology(r#"{"points":2,"preorder":[[0,1],[0,1]]}"#).unwrap_err();
        assert!(matches!(err, LoadError::Topology(TopologyError::NotReflexive { point: 0 })));
    }

    #[test]
    fn missing_file() {
        assert!(matches!(load_topology("/nonexistent/edtop.json"), Err(LoadError::Io { .. })));
    }

    #[test]
    fn round_trip_through_file_form() {
        for t in crate::enumeration::enumerate_topologies(3, Default::default()).unwrap() {
            let text = serde_json::to_string(&TopologyFile::from_topology(&t)).unwrap();
            assert_eq!(parse_topology(&text).unwrap(), t);
        }
    }
}
