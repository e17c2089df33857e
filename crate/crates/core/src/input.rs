//! Group description files.
//!
//! A file is a JSON object with a `kind` of either `finite_matrix` or
//! `algebraic`. Scalars, matrix entries and polynomials are strings in the
//! usual grammar, e.g. `"w/2"`, `"-1/3"`, `"z1*x1 + x2^2"`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebraic::{ActionInput, AlgebraicGroupSpec};
use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::group::FiniteMatrixGroup;
use crate::linalg::Matrix;
use crate::poly::Ring;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum GroupSpecFile {
    FiniteMatrix {
        #[serde(default)]
        label: Option<String>,
        field: FieldSpec,
        dimension: usize,
        #[serde(default)]
        variables: Option<Vec<String>>,
        generators: Vec<Vec<Vec<String>>>,
    },
    Algebraic {
        #[serde(default)]
        label: Option<String>,
        field: FieldSpec,
        group_vars: Vec<String>,
        #[serde(default)]
        ideal: Vec<String>,
        variables: Vec<String>,
        #[serde(default)]
        action_matrix: Option<Vec<Vec<String>>>,
        #[serde(default)]
        action_polynomials: Option<Vec<String>>,
        #[serde(default)]
        linear_reductive: bool,
    },
}

/// A parsed group together with the polynomial ring it acts on.
#[derive(Debug, Clone)]
pub enum LoadedGroup {
    Finite { group: FiniteMatrixGroup, ring: Ring },
    Algebraic(AlgebraicGroupSpec),
}

impl GroupSpecFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn label(&self) -> Option<&str> {
        match self {
            GroupSpecFile::FiniteMatrix { label, .. } | GroupSpecFile::Algebraic { label, .. } => label.as_deref(),
        }
    }

    /// Build the group. `cap` bounds the closure of a finite group.
    pub fn build(&self, cap: usize) -> Result<LoadedGroup> {
        match self {
            GroupSpecFile::FiniteMatrix { field, dimension, variables, generators, .. } => {
                let field = Field::from_spec(field)?;
                let names = match variables {
                    Some(v) => v.clone(),
                    None => (1..=*dimension).map(|i| format!("x{i}")).collect(),
                };
                if names.len() != *dimension {
                    return Err(Error::LengthMismatch { expected: *dimension, got: names.len() });
                }
                let mats = generators.iter().map(|g| Matrix::parse(&field, g)).collect::<Result<Vec<_>>>()?;
                let group = FiniteMatrixGroup::close(&field, *dimension, mats, cap)?;
                let ring = Ring::new(field, names)?;
                Ok(LoadedGroup::Finite { group, ring })
            }
            GroupSpecFile::Algebraic {
                field,
                group_vars,
                ideal,
                variables,
                action_matrix,
                action_polynomials,
                linear_reductive,
                ..
            } => {
                let field = Field::from_spec(field)?;
                let action = match (action_matrix, action_polynomials) {
                    (Some(m), None) => ActionInput::Matrix(m.clone()),
                    (None, Some(p)) => ActionInput::Polynomials(p.clone()),
                    _ => {
                        return Err(Error::InvalidSpec(
                            "exactly one of action_matrix and action_polynomials is required".into(),
                        ))
                    }
                };
                let spec = AlgebraicGroupSpec::new(
                    &field,
                    group_vars.clone(),
                    variables.clone(),
                    ideal,
                    &action,
                    *linear_reductive,
                )?;
                Ok(LoadedGroup::Algebraic(spec))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_CAP;

    #[test]
    fn finite_round_trip() {
        let text = r#"{"kind":"finite_matrix","field":{"kind":"simple_extension","minimal_poly":"w^2 - 2","generator":"w"},
            "dimension":2,"variables":["x","y"],"generators":[[["1","0"],["0","-1"]],[["w/2","-w/2"],["w/2","w/2"]]]}"#;
        let spec = GroupSpecFile::from_json(text).unwrap();
        let again = GroupSpecFile::from_json(&serde_json::to_string(&spec).unwrap()).unwrap();
        assert_eq!(spec, again);
        match spec.build(DEFAULT_CAP).unwrap() {
            LoadedGroup::Finite { group, ring } => {
                assert_eq!(group.order(), 16);
                assert_eq!(ring.names(), ["x", "y"]);
            }
            _ => panic!("expected a finite group"),
        }
    }

    #[test]
    fn algebraic_and_errors() {
        let text = r#"{"kind":"algebraic","field":{"kind":"rationals"},"group_vars":["z1","z2"],"ideal":["z1*z2 - 1"],
            "variables":["x1","x2"],"action_matrix":[["z1","0"],["0","z2"]],"linear_reductive":true}"#;
        assert!(matches!(
            GroupSpecFile::from_json(text).unwrap().build(DEFAULT_CAP).unwrap(),
            LoadedGroup::Algebraic(_)
        ));
        assert!(matches!(GroupSpecFile::from_json("{\"kind\":\"other\"}"), Err(Error::Parse(_))));
        let both = text.replace("\"linear_reductive\"", "\"action_polynomials\":[\"x1\",\"x2\"],\"linear_reductive\"");
        assert!(matches!(GroupSpecFile::from_json(&both).unwrap().build(DEFAULT_CAP), Err(Error::InvalidSpec(_))));
        let cap = r#"{"kind":"finite_matrix","field":{"kind":"rationals"},"dimension":1,"generators":[[["2"]]]}"#;
        assert!(matches!(GroupSpecFile::from_json(cap).unwrap().build(10), Err(Error::CapExceeded(10))));
    }
}
