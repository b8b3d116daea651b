//! Lattice spec files and serialization of derived data.
//!
//! A spec file is JSON in one of two forms: a `basis` form holding the rows
//! of a rational basis, or a `direct` form holding the group orders, the
//! parity check, the squared scale factors, and optionally the label
//! generators. Rationals travel as `"p/q"` strings (plain integers are
//! accepted too) so no float ever touches a file.

use crate::decode::{Candidate, Rounding};
use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::profile::{Basis, LatticeProfile};
use crate::rational::Rational;
use crate::table::CosetTable;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::path::Path;
use std::str::FromStr;

/// Rational carried as text in JSON.
#[derive(Clone, Debug, PartialEq)]
pub struct Rat(pub Rational);

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(i) => Ok(Rat(Rational::from_integer(i.into()))),
            Raw::Text(t) => Rational::from_str(t.trim())
                .map(Rat)
                .map_err(|e| D::Error::custom(format!("bad rational {t:?}: {e}"))),
        }
    }
}

/// Lattice description: exactly one of the two forms must be present.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct LatticeSpecFile {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<Vec<Rat>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<Vec<u64>>,
    #[serde(rename = "H", skip_serializing_if = "Option::is_none")]
    pub h: Option<Vec<Vec<Rat>>>,
    #[serde(rename = "P_sq", skip_serializing_if = "Option::is_none")]
    pub p_sq: Option<Vec<Rat>>,
    #[serde(rename = "C_sq", skip_serializing_if = "Option::is_none")]
    pub c_sq: Option<Vec<Rat>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<Vec<u64>>>,
}

impl LatticeSpecFile {
    pub fn from_json(text: &str) -> Result<Self> {
        let spec: LatticeSpecFile =
            serde_json::from_str(text).map_err(|e| Error::SpecFile(e.to_string()))?;
        spec.check_form()?;
        Ok(spec)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::SpecFile(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    fn check_form(&self) -> Result<()> {
        let direct_fields =
            [self.group.is_some(), self.h.is_some(), self.p_sq.is_some(), self.c_sq.is_some()];
        let any_direct = direct_fields.iter().any(|&b| b);
        let all_direct = direct_fields.iter().all(|&b| b);
        match (self.basis.is_some(), any_direct) {
            (true, true) => Err(Error::SpecFile(
                "both basis and direct forms present; use exactly one".into(),
            )),
            (false, false) => Err(Error::SpecFile(
                "neither basis nor direct form present".into(),
            )),
            (true, false) => Ok(()),
            (false, true) if all_direct => Ok(()),
            (false, true) => Err(Error::SpecFile(
                "direct form needs group, H, P_sq, and C_sq".into(),
            )),
        }
    }

    pub fn to_profile(&self) -> Result<LatticeProfile> {
        if let Some(rows) = &self.basis {
            let basis = Basis::new(
                rows.iter()
                    .map(|r| r.iter().map(|x| x.0.clone()).collect())
                    .collect(),
            )?;
            return LatticeProfile::derive(&basis);
        }
        let g = self.group.clone().expect("validated form");
        let h = self
            .h
            .as_ref()
            .expect("validated form")
            .iter()
            .map(|r| r.iter().map(|x| x.0.clone()).collect())
            .collect();
        let p_sq = self
            .p_sq
            .as_ref()
            .expect("validated form")
            .iter()
            .map(|x| x.0.clone())
            .collect();
        let c_sq = self
            .c_sq
            .as_ref()
            .expect("validated form")
            .iter()
            .map(|x| x.0.clone())
            .collect();
        let labels = self
            .labels
            .clone()
            .unwrap_or_default()
            .into_iter()
            .map(GroupElement)
            .collect();
        LatticeProfile::from_parts(g, h, p_sq, c_sq, labels)
    }

    /// Direct form of a profile; rationals serialize exactly.
    pub fn direct_from_profile(profile: &LatticeProfile) -> Self {
        let r = profile.rank();
        LatticeSpecFile {
            basis: None,
            group: Some(profile.orders().to_vec()),
            h: Some(
                profile
                    .h()
                    .iter()
                    .map(|row| row.iter().map(|x| Rat(x.clone())).collect())
                    .collect(),
            ),
            p_sq: Some((0..r).map(|i| Rat(profile.p_sq(i))).collect()),
            c_sq: Some((0..r).map(|i| Rat(profile.c_sq(i))).collect()),
            labels: Some(profile.labels().iter().map(|l| l.0.clone()).collect()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable spec")
    }
}

/// Decode request: a target plus options.
#[derive(Clone, Debug)]
pub struct DecodeRequest {
    pub target: Vec<f64>,
    pub rounding: Rounding,
    pub max_candidates: Option<usize>,
}

#[derive(Serialize)]
struct RecordOut {
    syndrome: Vec<String>,
    leaders: Vec<Vec<u64>>,
    norm: u64,
}

#[derive(Serialize)]
struct TableOut {
    group: Vec<u64>,
    order: Vec<usize>,
    generator_syndromes: Vec<Vec<String>>,
    records: Vec<RecordOut>,
}

/// Coset table as JSON: records in discovery order, syndromes as fraction
/// strings.
pub fn table_to_json(table: &CosetTable) -> String {
    let out = TableOut {
        group: table.spec().orders().to_vec(),
        order: table.order().permutation().iter().map(|&v| v + 1).collect(),
        generator_syndromes: table
            .generator_syndromes()
            .iter()
            .map(|s| s.0.iter().map(|x| x.to_string()).collect())
            .collect(),
        records: table
            .records()
            .iter()
            .map(|rec| RecordOut {
                syndrome: rec.syndrome.0.iter().map(|x| x.to_string()).collect(),
                leaders: rec.leaders.iter().map(|l| l.0.clone()).collect(),
                norm: rec.norm,
            })
            .collect(),
    };
    serde_json::to_string_pretty(&out).expect("serializable table")
}

/// Candidate list as JSON, already sorted by the decoder.
pub fn candidates_to_json(candidates: &[Candidate]) -> String {
    serde_json::to_string_pretty(candidates).expect("serializable candidates")
}
