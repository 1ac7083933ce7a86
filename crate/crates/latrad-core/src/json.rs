//! JSON form of a lattice: `{"elements": [...], "covers": [["a","b"], ...]}`.
//!
//! `elements` fixes the element order; `covers` lists `(lower, upper)`
//! pairs. Deserialization runs the full lattice validation, so a parsed
//! value is always a genuine lattice.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::LatticeError;
use crate::lattice::Lattice;

/// The raw serialized shape of a [`Lattice`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeJson {
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
}

impl From<&Lattice> for LatticeJson {
    fn from(l: &Lattice) -> Self {
        LatticeJson {
            elements: l.ids().to_vec(),
            covers: l
                .covers()
                .iter()
                .map(|&(a, b)| (l.id(a).to_owned(), l.id(b).to_owned()))
                .collect(),
        }
    }
}

impl TryFrom<LatticeJson> for Lattice {
    type Error = LatticeError;

    fn try_from(j: LatticeJson) -> Result<Self, LatticeError> {
        Lattice::from_covers(j.elements, &j.covers)
    }
}

impl Serialize for Lattice {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        LatticeJson::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Lattice {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let j = LatticeJson::deserialize(deserializer)?;
        Lattice::try_from(j).map_err(serde::de::Error::custom)
    }
}
