//! JSON problem files: a fan, named hypersurfaces and run options.

use std::collections::HashSet;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::hodge::{Checks, MethodChoice};
use crate::ring::{parse_polynomial, MultiPoly, RingSpec};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    #[default]
    Table,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    #[serde(default)]
    pub method: MethodChoice,
    #[serde(default)]
    pub checks: Checks,
    #[serde(default)]
    pub output: OutputFormat,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Hypersurface {
    pub name: String,
    pub polynomial: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub fan: Fan,
    /// Names of the Cox variables; `x1 … xn` when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variables: Option<Vec<String>>,
    #[serde(default)]
    pub hypersurfaces: Vec<Hypersurface>,
    #[serde(default)]
    pub options: Options,
}

/// A problem file with its polynomials parsed in the Cox ring.
#[derive(Clone, Debug)]
pub struct Problem {
    pub fan: Fan,
    pub ring: Arc<RingSpec>,
    pub names: Vec<String>,
    pub polynomials: Vec<MultiPoly>,
    pub options: Options,
}

impl ProblemFile {
    pub fn from_json(text: &str) -> Result<ProblemFile> {
        serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<ProblemFile> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Malformed(format!("cannot read {}: {e}", path.display())))?;
        ProblemFile::from_json(&text)
    }

    /// Checks the fan shape and parses the polynomials. Does not run
    /// [`crate::fan::validate_fan`].
    pub fn resolve(&self) -> Result<Problem> {
        let fan = Fan::new(
            self.fan.dim(),
            self.fan.rays().to_vec(),
            self.fan.max_cones().to_vec(),
        )?;
        let mut seen = HashSet::new();
        for h in &self.hypersurfaces {
            if !seen.insert(h.name.as_str()) {
                return Err(Error::Malformed(format!(
                    "duplicate hypersurface name `{}`",
                    h.name
                )));
            }
        }
        let ring = Arc::new(RingSpec::cox(&fan, self.variables.clone())?);
        let polynomials = self
            .hypersurfaces
            .iter()
            .map(|h| parse_polynomial(&ring, &h.polynomial))
            .collect::<Result<Vec<_>>>()?;
        Ok(Problem {
            fan,
            ring,
            names: self.hypersurfaces.iter().map(|h| h.name.clone()).collect(),
            polynomials,
            options: self.options.clone(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const QUADRICS: &str = r#"{
        "fan": {"lattice_rank": 2, "rays": [[1,0],[0,1],[-1,-1]], "max_cones": [[0,1],[1,2],[0,2]]},
        "hypersurfaces": [{"name": "q", "polynomial": "x1^2 + x2^2 + x3^2"}],
        "options": {"method": "colon", "checks": "skip-smoothness"}
    }"#;

    #[test]
    fn parse_and_resolve() {
        let file = ProblemFile::from_json(QUADRICS).unwrap();
        assert_eq!(file.options.method, MethodChoice::Colon);
        assert_eq!(file.options.checks, Checks::SkipSmoothness);
        assert_eq!(file.options.output, OutputFormat::Table);
        let p = file.resolve().unwrap();
        assert_eq!(p.polynomials[0].num_terms(), 3);
        assert_eq!(p.names, vec!["q"]);
    }

    #[test]
    fn custom_variable_names() {
        let text = QUADRICS.replace("x1^2 + x2^2 + x3^2", "a^2 + b*c").replace(
            "\"hypersurfaces\"",
            "\"variables\": [\"a\", \"b\", \"c\"], \"hypersurfaces\"",
        );
        let p = ProblemFile::from_json(&text).unwrap().resolve().unwrap();
        assert_eq!(p.polynomials[0].to_string(), "a^2 + b*c");
    }

    #[test]
    fn rejects_bad_input() {
        let dup = QUADRICS.replace(
            r#"[{"name": "q", "polynomial": "x1^2 + x2^2 + x3^2"}]"#,
            r#"[{"name": "q", "polynomial": "x1"}, {"name": "q", "polynomial": "x2"}]"#,
        );
        let err = ProblemFile::from_json(&dup).unwrap().resolve().unwrap_err();
        assert!(matches!(err, Error::Malformed(_)));
        let unknown = QUADRICS.replace("x3^2\"", "x4^2\"");
        let err = ProblemFile::from_json(&unknown)
            .unwrap()
            .resolve()
            .unwrap_err();
        assert_eq!(err, Error::UnknownVariable("x4".into()));
        assert!(matches!(
            ProblemFile::from_json("{\"fan\": 1}"),
            Err(Error::Malformed(_))
        ));
    }
}
