use serde::{Deserialize, Serialize};

use super::{BasisVector, ModuleError, Parity, SuperModule};
use crate::linalg::rational::{serde_str, serde_str_rows, Rational};
use crate::linalg::Matrix;

pub const MODULE_SCHEMA: &str = "gl11.supermodule/v1";

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BasisJson {
    pub name: String,
    #[serde(with = "serde_str")]
    pub weight: Rational,
    pub parity: Parity,
    #[serde(with = "serde_str")]
    pub charge: Rational,
}

/// Serialized form of a module: named basis plus dense operator matrices.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModuleJson {
    pub schema: String,
    pub basis: Vec<BasisJson>,
    #[serde(with = "serde_str_rows")]
    pub x: Vec<Vec<Rational>>,
    #[serde(with = "serde_str_rows")]
    pub y: Vec<Vec<Rational>>,
}

impl From<&SuperModule> for ModuleJson {
    fn from(m: &SuperModule) -> Self {
        ModuleJson {
            schema: MODULE_SCHEMA.to_string(),
            basis: m
                .basis()
                .iter()
                .map(|b| BasisJson {
                    name: b.name.clone(),
                    weight: b.weight.clone(),
                    parity: b.parity,
                    charge: b.charge.clone(),
                })
                .collect(),
            x: m.x().to_rows(),
            y: m.y().to_rows(),
        }
    }
}

impl TryFrom<ModuleJson> for SuperModule {
    type Error = ModuleError;

    fn try_from(j: ModuleJson) -> Result<Self, ModuleError> {
        if j.schema != MODULE_SCHEMA {
            return Err(ModuleError::Json(format!("unknown schema {:?}", j.schema)));
        }
        let n = j.basis.len();
        let to_matrix = |rows: Vec<Vec<Rational>>, op: &str| {
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(ModuleError::Json(format!("operator {op} is not {n}x{n}")));
            }
            Ok(Matrix::from_rows(rows, n))
        };
        let x = to_matrix(j.x, "x")?;
        let y = to_matrix(j.y, "y")?;
        let basis = j
            .basis
            .into_iter()
            .map(|b| BasisVector { name: b.name, weight: b.weight, parity: b.parity, charge: b.charge })
            .collect();
        SuperModule::new(basis, x, y)
    }
}

impl SuperModule {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ModuleJson::from(self)).expect("module serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<SuperModule, ModuleError> {
        let j: ModuleJson = serde_json::from_value(v.clone()).map_err(|e| ModuleError::Json(e.to_string()))?;
        SuperModule::try_from(j)
    }
}
