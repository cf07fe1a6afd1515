//! JSON file formats for preorders, linear maps, and certificates.
//!
//! Preorder files carry a generating relation; the transitive-reflexive
//! closure is always applied on load, so a file does not need to repeat
//! implied pairs. Map files carry one entry per basis index with a nonzero
//! image; omitted indices default to image zero. Coefficients are strings in
//! the ring's canonical notation, which keeps arbitrary-precision values
//! exact through serialization.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::algebra::{BasisIndex, IncidenceAlgebra, LinearMap};
use crate::decompose::DecompositionCertificate;
use crate::error::{Error, Result};
use crate::preorder::Preorder;
use crate::report::{ComponentRelationReport, IdentityReport};
use crate::ring::{RingSpec, Scalar};

/// On-disk form of a preorder: elements plus a generating relation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetFile {
    pub elements: Vec<String>,
    pub relations: Vec<(String, String)>,
}

/// Loads a preorder from its file form, applying closure.
pub fn poset_from_file(file: &PosetFile) -> Result<Preorder> {
    Preorder::closure(&file.elements, &file.relations)
}

/// Parses a preorder from JSON text, applying closure.
pub fn poset_from_json(text: &str) -> Result<Preorder> {
    poset_from_file(&serde_json::from_str(text)?)
}

/// Renders a preorder back to its file form with the full closed relation,
/// so the output is stable under further round trips.
pub fn poset_to_file(preorder: &Preorder) -> PosetFile {
    PosetFile {
        elements: preorder.labels().to_vec(),
        relations: preorder
            .relation_pairs()
            .into_iter()
            .map(|(x, y)| (x.to_string(), y.to_string()))
            .collect(),
    }
}

/// One image entry of a map file: the basis index it describes and the
/// nonzero coefficients of its image.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapImage {
    pub from: (String, String),
    pub to: Vec<(String, String, String)>,
}

/// On-disk form of a linear map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapFile {
    pub ring: String,
    pub images: Vec<MapImage>,
}

/// Builds a linear map on `algebra` from its file form. The file's ring must
/// match the algebra's; duplicate `from` entries and unknown indices are
/// rejected; omitted indices get image zero.
pub fn map_from_file(algebra: &IncidenceAlgebra, file: &MapFile) -> Result<LinearMap> {
    let ring: RingSpec = file.ring.parse()?;
    if ring != algebra.ring() {
        return Err(Error::RingMismatch(algebra.ring(), ring));
    }
    let mut seen: BTreeSet<BasisIndex> = BTreeSet::new();
    let mut images = Vec::new();
    for entry in &file.images {
        let from = algebra.basis_index(&entry.from.0, &entry.from.1)?;
        if !seen.insert(from) {
            return Err(Error::Precondition {
                name: "map-images".to_string(),
                detail: format!(
                    "duplicate image entry for e({},{})",
                    entry.from.0, entry.from.1
                ),
            });
        }
        let mut coefficients = Vec::new();
        for (x, y, c) in &entry.to {
            coefficients.push((algebra.basis_index(x, y)?, Scalar::parse(ring, c)?));
        }
        images.push((from, algebra.element(coefficients)?));
    }
    LinearMap::from_images(algebra, images)
}

/// Parses a linear map from JSON text against an algebra.
pub fn map_from_json(algebra: &IncidenceAlgebra, text: &str) -> Result<LinearMap> {
    map_from_file(algebra, &serde_json::from_str(text)?)
}

/// Renders a linear map to its file form, listing only nonzero images in
/// basis order.
pub fn map_to_file(map: &LinearMap) -> MapFile {
    let algebra = map.algebra();
    let images = algebra
        .basis()
        .iter()
        .filter_map(|&b| {
            let image = map.image(b);
            if image.is_zero() {
                return None;
            }
            let (fx, fy) = algebra.label_pair(b);
            let to = image
                .support()
                .map(|(index, coefficient)| {
                    let (x, y) = algebra.label_pair(index);
                    (x.to_string(), y.to_string(), coefficient.to_string())
                })
                .collect();
            Some(MapImage {
                from: (fx.to_string(), fy.to_string()),
                to,
            })
        })
        .collect();
    MapFile {
        ring: algebra.ring().to_string(),
        images,
    }
}

/// On-disk form of a decomposition certificate: the input pair, every
/// constructed map, and every verification report.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertificateFile {
    pub schema: String,
    pub verdict: bool,
    pub xi: MapFile,
    pub tau: MapFile,
    pub assembled: MapFile,
    pub relating_derivation: MapFile,
    pub residual: MapFile,
    pub checks: Vec<IdentityReport>,
    pub component_relations: ComponentRelationReport,
}

/// Renders a certificate to its file form.
pub fn certificate_to_file(certificate: &DecompositionCertificate) -> CertificateFile {
    CertificateFile {
        schema: "incalg/1".to_string(),
        verdict: certificate.verdict(),
        xi: map_to_file(certificate.outer()),
        tau: map_to_file(certificate.relating()),
        assembled: map_to_file(certificate.assembled()),
        relating_derivation: map_to_file(certificate.relating_derivation()),
        residual: map_to_file(certificate.residual()),
        checks: certificate.checks().to_vec(),
        component_relations: certificate.component_relations().clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GenPair;
    use crate::decompose::certify;

    fn chain2() -> Preorder {
        Preorder::closure(&["1", "2"], &[("1", "2")]).unwrap()
    }

    #[test]
    fn poset_files_round_trip_through_closure() {
        let text = r#"{"elements": ["1", "2", "3"], "relations": [["1", "2"], ["2", "3"]]}"#;
        let preorder = poset_from_json(text).unwrap();
        assert!(preorder.leq("1", "3").unwrap());

        let file = poset_to_file(&preorder);
        assert!(file.relations.contains(&("1".to_string(), "3".to_string())));
        assert!(file.relations.contains(&("2".to_string(), "2".to_string())));
        let reloaded = poset_from_file(&file).unwrap();
        assert_eq!(reloaded, preorder);
    }

    #[test]
    fn poset_files_reject_unknown_labels() {
        let text = r#"{"elements": ["1"], "relations": [["1", "9"]]}"#;
        assert!(matches!(
            poset_from_json(text),
            Err(Error::UnknownLabel(label)) if label == "9"
        ));
    }

    #[test]
    fn map_files_round_trip() {
        let algebra = IncidenceAlgebra::new(chain2(), RingSpec::Rationals);
        let f = algebra
            .element_parsed(&[("1", "2", "-5/3"), ("1", "1", "2")])
            .unwrap();
        let map = LinearMap::inner(&f)
            .add(&LinearMap::left_multiplication(&f))
            .unwrap();
        let file = map_to_file(&map);
        let reloaded = map_from_file(&algebra, &file).unwrap();
        assert_eq!(reloaded, map);
    }

    #[test]
    fn zero_images_are_omitted_and_default_on_load() {
        let algebra = IncidenceAlgebra::new(chain2(), RingSpec::ModN(5));
        let e11 = algebra.basis_index("1", "1").unwrap();
        let e12 = algebra.basis_index("1", "2").unwrap();
        let map =
            LinearMap::from_images(&algebra, [(e11, algebra.basis_element(e12))]).unwrap();
        let file = map_to_file(&map);
        assert_eq!(file.images.len(), 1);
        let reloaded = map_from_file(&algebra, &file).unwrap();
        assert!(reloaded.image(e12).is_zero());
        assert_eq!(reloaded, map);
    }

    #[test]
    fn map_files_must_match_the_algebra_ring() {
        let algebra = IncidenceAlgebra::new(chain2(), RingSpec::Rationals);
        let file = MapFile {
            ring: "Z/5".to_string(),
            images: vec![],
        };
        assert!(matches!(
            map_from_file(&algebra, &file),
            Err(Error::RingMismatch(RingSpec::Rationals, RingSpec::ModN(5)))
        ));
    }

    #[test]
    fn duplicate_image_entries_are_rejected() {
        let algebra = IncidenceAlgebra::new(chain2(), RingSpec::Rationals);
        let entry = MapImage {
            from: ("1".to_string(), "1".to_string()),
            to: vec![],
        };
        let file = MapFile {
            ring: "Q".to_string(),
            images: vec![entry.clone(), entry],
        };
        assert!(matches!(
            map_from_file(&algebra, &file),
            Err(Error::Precondition { name, .. }) if name == "map-images"
        ));
    }

    #[test]
    fn malformed_json_is_reported_as_such() {
        let algebra = IncidenceAlgebra::new(chain2(), RingSpec::Rationals);
        assert!(matches!(
            map_from_json(&algebra, "{not json"),
            Err(Error::Json(_))
        ));
        assert!(matches!(poset_from_json("[]"), Err(Error::Json(_))));
    }

    #[test]
    fn certificates_serialize_with_schema_and_verdict() {
        let algebra = IncidenceAlgebra::new(chain2(), RingSpec::Rationals);
        let f = algebra.element_parsed(&[("1", "2", "3")]).unwrap();
        let d = LinearMap::inner(&f);
        let pair = GenPair::new(d.clone(), d).unwrap();
        let certificate = certify(&pair).unwrap();
        let file = certificate_to_file(&certificate);
        assert_eq!(file.schema, "incalg/1");
        assert!(file.verdict);
        assert!(file.residual.images.is_empty());

        let text = serde_json::to_string_pretty(&file).unwrap();
        assert!(text.contains("\"identity\": \"residual-zero\""));
        let reparsed: CertificateFile = serde_json::from_str(&text).unwrap();
        assert_eq!(reparsed.verdict, file.verdict);
        assert_eq!(reparsed.xi, file.xi);
    }
}
