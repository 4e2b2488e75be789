use thin_graph::Graph;
use thin_order::Budget;

use crate::catalog::family;
use crate::search::{ord_membership, Membership};
use crate::PatternError;

/// Classes recognized by [`classify`], each with the plain family whose
/// avoidance characterizes it. `P569` alone admits graphs that are not
/// independent 2-thin (the 6-cycle, ordered 0 2 1 4 3 5); `S` closes the gap.
pub const KNOWN_CLASSES: [(&str, &str); 6] = [
    ("interval", "P1"),
    ("proper interval", "P12"),
    ("2-thin", "P6789"),
    ("independent 2-thin", "P569S"),
    ("proper independent 2-thin", "P34"),
    ("monotone L", "P6"),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassVerdict {
    pub class: &'static str,
    pub family: &'static str,
    pub outcome: Membership,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassReport {
    pub verdicts: Vec<ClassVerdict>,
}

impl ClassReport {
    pub fn get(&self, class: &str) -> Option<&ClassVerdict> {
        self.verdicts.iter().find(|v| v.class == class)
    }

    /// `None` when the class is unknown or its search ran out of budget.
    pub fn member(&self, class: &str) -> Option<bool> {
        self.get(class)?.outcome.is_member()
    }
}

/// Membership in every class of [`KNOWN_CLASSES`]; `budget` applies to each
/// search separately.
pub fn classify(g: &Graph, budget: Budget) -> Result<ClassReport, PatternError> {
    let verdicts = KNOWN_CLASSES
        .iter()
        .map(|&(class, fam)| {
            let outcome = ord_membership(g, &family(fam)?, budget)?;
            Ok(ClassVerdict { class, family: fam, outcome })
        })
        .collect::<Result<_, PatternError>>()?;
    Ok(ClassReport { verdicts })
}
