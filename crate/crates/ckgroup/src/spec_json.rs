use std::path::Path;

use ckgroup_core::group::GroupSpec;
use ckgroup_core::scalars::{CkAssignment, CkValue};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// `{"n": 3, "sigma": [1, 2, 3], "j": ["nil", "unit"]}`. Values are `formal`,
/// `unit`, `nil` and `im`. `sigma` defaults to
/// the identity and `j` to all formal.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecDto {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j: Option<Vec<String>>,
}

impl SpecDto {
    pub fn from_spec(spec: &GroupSpec) -> Self {
        SpecDto {
            n: spec.n(),
            sigma: Some(spec.sigma().to_vec()),
            j: Some(
                spec.assignment()
                    .values()
                    .iter()
                    .map(|v| v.name().to_string())
                    .collect(),
            ),
        }
    }

    pub fn to_spec(&self) -> Result<GroupSpec, CliError> {
        let n = self.n;
        let sigma = self.sigma.clone().unwrap_or_else(|| (1..=n).collect());
        let assignment = match &self.j {
            None => CkAssignment::all(n.saturating_sub(1), CkValue::Formal),
            Some(names) => {
                let values = names
                    .iter()
                    .map(|s| CkValue::parse(s).ok_or_else(|| CliError::Input(format!("unknown parameter value {s:?}"))))
                    .collect::<Result<Vec<_>, _>>()?;
                CkAssignment::new(values)
            }
        };
        Ok(GroupSpec::new(n, sigma, assignment)?)
    }
}

/// Reads a spec given inline (anything starting with `{`) or as a file path.
pub fn load_spec(arg: &str) -> Result<GroupSpec, CliError> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(Path::new(arg)).map_err(|e| CliError::Input(format!("cannot read {arg}: {e}")))?
    };
    let dto: SpecDto = serde_json::from_str(&text).map_err(|e| CliError::Input(format!("invalid spec JSON: {e}")))?;
    dto.to_spec()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inline_spec_round_trips() {
        let spec = load_spec(r#"{"n":3,"sigma":[2,1,3],"j":["nil","nil"]}"#).unwrap();
        let back = SpecDto::from_spec(&spec).to_spec().unwrap();
        assert_eq!(spec, back);
    }

    #[test]
    fn defaults_and_errors() {
        let spec = load_spec(r#"{"n":4}"#).unwrap();
        assert!(spec.is_identity_permutation());
        assert!(matches!(
            load_spec(r#"{"n":3,"sigma":[1,1,3]}"#),
            Err(CliError::Spec(_))
        ));
        assert!(matches!(
            load_spec(r#"{"n":3,"j":["x","nil"]}"#),
            Err(CliError::Input(_))
        ));
        assert!(matches!(load_spec("{"), Err(CliError::Input(_))));
    }
}
