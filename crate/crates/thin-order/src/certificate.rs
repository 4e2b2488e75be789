use serde::{Deserialize, Serialize};
use thin_graph::{GraphError, Partition, Representation, VertexOrder};
use thiserror::Error;

use crate::ConsistencyMode;

/// Which thinness variant: `proper` asks for strong consistency,
/// `independent` for classes that are independent sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ThinnessKind {
    pub proper: bool,
    pub independent: bool,
}

impl ThinnessKind {
    pub const THIN: Self = ThinnessKind { proper: false, independent: false };
    pub const PTHIN: Self = ThinnessKind { proper: true, independent: false };
    pub const INDTHIN: Self = ThinnessKind { proper: false, independent: true };
    pub const INDPTHIN: Self = ThinnessKind { proper: true, independent: true };
    pub const ALL: [Self; 4] = [Self::THIN, Self::PTHIN, Self::INDTHIN, Self::INDPTHIN];

    pub fn mode(self) -> ConsistencyMode {
        if self.proper {
            ConsistencyMode::Strong
        } else {
            ConsistencyMode::Consistent
        }
    }

    pub fn name(self) -> &'static str {
        match (self.proper, self.independent) {
            (false, false) => "thin",
            (true, false) => "pthin",
            (false, true) => "indthin",
            (true, true) => "indpthin",
        }
    }
}

impl std::fmt::Display for ThinnessKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for ThinnessKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown kind `{s}` (expected thin|pthin|indthin|indpthin)"))
    }
}

impl Serialize for ThinnessKind {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for ThinnessKind {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Wire form of a certificate:
/// `{"order": [...], "classes": [...], "kind": "thin", "k": 2}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub order: Vec<usize>,
    pub classes: Vec<usize>,
    pub kind: ThinnessKind,
    pub k: usize,
}

#[derive(Debug, Error)]
pub enum CertificateError {
    #[error("malformed certificate JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid certificate: {0}")]
    Invalid(#[from] GraphError),
    #[error("declared k = {declared} but partition has {actual} classes")]
    WrongK { declared: usize, actual: usize },
}

impl Certificate {
    pub fn new(rep: &Representation, kind: ThinnessKind) -> Self {
        Certificate {
            order: rep.order.seq().to_vec(),
            classes: rep.partition.labels().to_vec(),
            kind,
            k: rep.partition.k(),
        }
    }

    pub fn to_representation(&self) -> Result<Representation, CertificateError> {
        let partition = Partition::new(self.classes.clone())?;
        if partition.k() != self.k {
            return Err(CertificateError::WrongK { declared: self.k, actual: partition.k() });
        }
        Ok(Representation::new(VertexOrder::new(self.order.clone())?, partition)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, CertificateError> {
        Ok(serde_json::from_str(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kind_names_round_trip() {
        for k in ThinnessKind::ALL {
            assert_eq!(k.name().parse::<ThinnessKind>().unwrap(), k);
        }
        assert!("proper".parse::<ThinnessKind>().is_err());
    }

    #[test]
    fn certificate_json_round_trip() {
        let c = Certificate { order: vec![1, 0, 2], classes: vec![0, 1, 0], kind: ThinnessKind::PTHIN, k: 2 };
        let s = c.to_json();
        assert_eq!(s, r#"{"order":[1,0,2],"classes":[0,1,0],"kind":"pthin","k":2}"#);
        let back = Certificate::from_json(&s).unwrap();
        assert_eq!(back, c);
        assert_eq!(back.to_representation().unwrap().partition.k(), 2);
    }

    #[test]
    fn wrong_k_is_rejected() {
        let c = Certificate { order: vec![0, 1], classes: vec![0, 0], kind: ThinnessKind::THIN, k: 2 };
        assert!(matches!(c.to_representation(), Err(CertificateError::WrongK { .. })));
    }
}
