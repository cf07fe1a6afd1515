//! Pass/fail reports that carry explicit witnesses.
//!
//! Every identity check reports the instances that failed, never just a
//! boolean: a [`Witness`] names the inputs it was evaluated on and renders
//! both sides of the identity. Reports serialize directly into the JSON
//! emitted by the command-line tool.

use serde::{Deserialize, Serialize};

use crate::algebra::IncidenceElement;

/// One failing instance of an identity: the inputs and both evaluated sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub inputs: Vec<String>,
    pub left: String,
    pub right: String,
}

/// Outcome of checking one identity over its full instance set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: String,
    pub passed: bool,
    pub witnesses: Vec<Witness>,
}

impl IdentityReport {
    pub fn new(identity: impl Into<String>) -> Self {
        IdentityReport {
            identity: identity.into(),
            passed: true,
            witnesses: Vec::new(),
        }
    }

    /// Compares two evaluated sides, recording a witness when they differ.
    pub fn check(
        &mut self,
        inputs: Vec<String>,
        left: &IncidenceElement,
        right: &IncidenceElement,
    ) {
        if left != right {
            self.passed = false;
            self.witnesses.push(Witness {
                inputs,
                left: left.render(),
                right: right.render(),
            });
        }
    }

    /// Requires an evaluated expression to vanish.
    pub fn check_zero(&mut self, inputs: Vec<String>, value: &IncidenceElement) {
        if !value.is_zero() {
            self.passed = false;
            self.witnesses.push(Witness {
                inputs,
                left: value.render(),
                right: "0".to_string(),
            });
        }
    }

    /// Records a failure whose sides are already rendered.
    pub fn record_failure(&mut self, inputs: Vec<String>, left: String, right: String) {
        self.passed = false;
        self.witnesses.push(Witness {
            inputs,
            left,
            right,
        });
    }

    /// Folds a sub-report in, tagging its witnesses with a context prefix.
    pub fn absorb(&mut self, prefix: &str, other: IdentityReport) {
        if other.passed {
            return;
        }
        self.passed = false;
        for mut witness in other.witnesses {
            for input in &mut witness.inputs {
                *input = format!("{prefix}:{input}");
            }
            self.witnesses.push(witness);
        }
    }
}

/// One evaluated relation between image components, with both scalar sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationInstance {
    pub relation: String,
    pub elements: Vec<String>,
    pub left: String,
    pub right: String,
    pub holds: bool,
}

/// Outcome of the component-relation scan over a map's images.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentRelationReport {
    pub passed: bool,
    pub instances: Vec<RelationInstance>,
}

impl ComponentRelationReport {
    pub fn new() -> Self {
        ComponentRelationReport {
            passed: true,
            instances: Vec::new(),
        }
    }

    pub fn record(
        &mut self,
        relation: impl Into<String>,
        elements: Vec<String>,
        left: String,
        right: String,
    ) {
        let holds = left == right;
        self.passed &= holds;
        self.instances.push(RelationInstance {
            relation: relation.into(),
            elements,
            left,
            right,
            holds,
        });
    }
}

impl Default for ComponentRelationReport {
    fn default() -> Self {
        ComponentRelationReport::new()
    }
}
