use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::cycles::{classify_gain, CycleType, DEFAULT_RE_TOL};
use super::report::{TheoremReport, Witness};
use crate::blocks::{cycle_structure, CycleStructure};
use crate::error::{GraphError, TheoremError};
use crate::graph::GainGraph;
use crate::matching::matching_number;
use crate::spectral::{inertia, Inertia};

/// Which index attains which end of `m - c <= index <= m + c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum OptimalityKind {
    #[serde(rename = "p-lower")]
    PLower,
    #[serde(rename = "p-upper")]
    PUpper,
    #[serde(rename = "n-lower")]
    NLower,
    #[serde(rename = "n-upper")]
    NUpper,
}

impl OptimalityKind {
    pub const ALL: [OptimalityKind; 4] =
        [OptimalityKind::PLower, OptimalityKind::PUpper, OptimalityKind::NLower, OptimalityKind::NUpper];

    /// The cycle type every cycle of an optimal graph must have.
    pub fn required_type(self) -> CycleType {
        match self {
            OptimalityKind::PLower | OptimalityKind::NLower => CycleType::A,
            OptimalityKind::PUpper => CycleType::C,
            OptimalityKind::NUpper => CycleType::D,
        }
    }

    pub fn is_lower(self) -> bool {
        matches!(self, OptimalityKind::PLower | OptimalityKind::NLower)
    }

    pub fn name(self) -> &'static str {
        match self {
            OptimalityKind::PLower => "p-lower",
            OptimalityKind::PUpper => "p-upper",
            OptimalityKind::NLower => "n-lower",
            OptimalityKind::NUpper => "n-upper",
        }
    }

    /// The inertia index this kind constrains.
    pub fn index(self, i: Inertia) -> usize {
        match self {
            OptimalityKind::PLower | OptimalityKind::PUpper => i.positive,
            OptimalityKind::NLower | OptimalityKind::NUpper => i.negative,
        }
    }

    /// `m - c` or `m + c`.
    pub fn bound(self, matching: usize, cyclomatic: usize) -> i64 {
        if self.is_lower() {
            matching as i64 - cyclomatic as i64
        } else {
            (matching + cyclomatic) as i64
        }
    }
}

impl fmt::Display for OptimalityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OptimalityKind {
    type Err = String;

    fn from_str(s: &str) -> Result<OptimalityKind, String> {
        let key: String = s.to_ascii_lowercase().chars().filter(|c| c.is_ascii_alphanumeric()).collect();
        match key.as_str() {
            "plower" => Ok(OptimalityKind::PLower),
            "pupper" => Ok(OptimalityKind::PUpper),
            "nlower" => Ok(OptimalityKind::NLower),
            "nupper" => Ok(OptimalityKind::NUpper),
            _ => Err(format!("unknown optimality kind {s:?} (expected plower, pupper, nlower or nupper)")),
        }
    }
}

/// Whether the graph attains the bound for `kind`, from its own global
/// `m`, `c` and inertia. Valid for disconnected graphs as well.
pub fn is_optimal(g: &GainGraph, kind: OptimalityKind) -> bool {
    kind.index(inertia(g)) as i64 == kind.bound(matching_number(g), g.cyclomatic_number())
}

/// Everything both sides of the characterization need, computed once.
#[derive(Clone, Debug)]
pub struct Profile {
    pub inertia: Inertia,
    pub matching: usize,
    pub cyclomatic: usize,
    pub structure: CycleStructure,
    /// Types of `structure.cycles`, in the same order.
    pub cycle_types: Vec<CycleType>,
    /// `m(T_G)`, when cycles are vertex-disjoint.
    pub contracted_matching: Option<usize>,
    /// `m(G - O(G))`, when cycles are vertex-disjoint.
    pub acyclic_part_matching: Option<usize>,
}

impl Profile {
    pub fn new(g: &GainGraph) -> Profile {
        let structure = cycle_structure(g);
        let cycle_types = structure
            .cycles
            .iter()
            .map(|c| classify_gain(c.len(), g.gain_of_cycle(c).expect("listed cycle"), DEFAULT_RE_TOL))
            .collect();
        let (contracted_matching, acyclic_part_matching) = if structure.vertex_disjoint {
            let t = structure.contracted.as_ref().expect("present when disjoint");
            let (rest, _) = g.delete_vertices(&structure.cycle_vertices).expect("own vertices");
            (Some(matching_number(t)), Some(matching_number(&rest)))
        } else {
            (None, None)
        };
        Profile {
            inertia: inertia(g),
            matching: matching_number(g),
            cyclomatic: g.cyclomatic_number(),
            structure,
            cycle_types,
            contracted_matching,
            acyclic_part_matching,
        }
    }

    /// Cycles pairwise disjoint, all of the required type, and `m(T_G) = m(G - O(G))`.
    pub fn structural(&self, kind: OptimalityKind) -> bool {
        self.structure.vertex_disjoint
            && self.cycle_types.iter().all(|&t| t == kind.required_type())
            && self.contracted_matching == self.acyclic_part_matching
    }

    /// The index attains the bound.
    pub fn spectral(&self, kind: OptimalityKind) -> bool {
        kind.index(self.inertia) as i64 == kind.bound(self.matching, self.cyclomatic)
    }

    pub fn witness(&self) -> Witness {
        let mut w = Witness::new()
            .value("p", self.inertia.positive)
            .value("n", self.inertia.negative)
            .value("m", self.matching)
            .value("c", self.cyclomatic)
            .value("disjoint", self.structure.vertex_disjoint as i64);
        if let (Some(t), Some(r)) = (self.contracted_matching, self.acyclic_part_matching) {
            w = w.value("m_contracted", t).value("m_outside_cycles", r);
        }
        w
    }
}

fn require_connected(g: &GainGraph) -> Result<(), TheoremError> {
    let k = g.component_count();
    if k > 1 {
        return Err(GraphError::Disconnected(k).into());
    }
    Ok(())
}

/// The structural side of the characterization, for a connected graph.
pub fn check_structural(g: &GainGraph, kind: OptimalityKind) -> Result<bool, TheoremError> {
    require_connected(g)?;
    Ok(Profile::new(g).structural(kind))
}

/// The spectral side: the relevant index equals `m - c` or `m + c`.
pub fn check_spectral(g: &GainGraph, kind: OptimalityKind) -> Result<bool, TheoremError> {
    require_connected(g)?;
    Ok(is_optimal(g, kind))
}

/// Holds when the structural and spectral sides agree.
pub fn verify_characterization(g: &GainGraph, kind: OptimalityKind) -> Result<TheoremReport, TheoremError> {
    require_connected(g)?;
    let profile = Profile::new(g);
    Ok(characterization_report(&profile, kind))
}

pub(crate) fn characterization_report(profile: &Profile, kind: OptimalityKind) -> TheoremReport {
    let structural = profile.structural(kind);
    let spectral = profile.spectral(kind);
    let witness = profile
        .witness()
        .value("structural", structural as i64)
        .value("spectral", spectral as i64);
    TheoremReport::check(format!("characterization/{kind}"), structural == spectral, witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gain::Gain;
    use crate::graph::named::*;

    fn c4_with_pendant_path() -> GainGraph {
        cycle(4).disjoint_union(&path(2)).with_edge(0, 4, Gain::ONE).unwrap()
    }

    #[test]
    fn structural_examples() {
        let g = c4_with_pendant_path();
        assert!(check_structural(&g, OptimalityKind::PLower).unwrap());
        assert!(check_structural(&g, OptimalityKind::NLower).unwrap());
        let single = cycle(4).disjoint_union(&GainGraph::empty(1)).with_edge(0, 4, Gain::ONE).unwrap();
        assert!(!check_structural(&single, OptimalityKind::PLower).unwrap());
        assert!(check_structural(&cycle(3), OptimalityKind::NUpper).unwrap());
        assert!(!check_structural(&cycle(3), OptimalityKind::PUpper).unwrap());
    }

    #[test]
    fn spectral_examples() {
        assert!(check_spectral(&c4_with_pendant_path(), OptimalityKind::PLower).unwrap());
        let signed = cycle_with_gains(&[Gain::ONE, Gain::ONE, Gain::MINUS_ONE]);
        assert!(check_spectral(&signed, OptimalityKind::PUpper).unwrap());
        assert!(check_spectral(&cycle(3), OptimalityKind::NUpper).unwrap());
    }

    #[test]
    fn characterization_examples() {
        let g = c4_with_pendant_path();
        for kind in [OptimalityKind::PLower, OptimalityKind::NLower] {
            let r = verify_characterization(&g, kind).unwrap();
            assert!(!r.failed());
        }
        let c4b = cycle_with_gains(&[Gain::ONE, Gain::ONE, Gain::ONE, Gain::MINUS_ONE]);
        assert!(!check_structural(&c4b, OptimalityKind::PLower).unwrap());
        assert!(!check_spectral(&c4b, OptimalityKind::PLower).unwrap());
        assert!(!verify_characterization(&c4b, OptimalityKind::PLower).unwrap().failed());
    }

    #[test]
    fn trees_attain_every_kind() {
        let t = star(3);
        for kind in OptimalityKind::ALL {
            assert!(check_structural(&t, kind).unwrap());
            assert!(check_spectral(&t, kind).unwrap());
        }
    }

    #[test]
    fn disconnected_is_rejected() {
        let g = cycle(3).disjoint_union(&path(2));
        assert!(matches!(
            check_structural(&g, OptimalityKind::PLower),
            Err(TheoremError::Graph(GraphError::Disconnected(2)))
        ));
        assert!(check_spectral(&g, OptimalityKind::PLower).is_err());
        assert!(verify_characterization(&g, OptimalityKind::PLower).is_err());
    }

    #[test]
    fn kind_names_round_trip() {
        for kind in OptimalityKind::ALL {
            assert_eq!(kind.name().parse::<OptimalityKind>().unwrap(), kind);
        }
        assert_eq!("PLower".parse::<OptimalityKind>().unwrap(), OptimalityKind::PLower);
        assert!("sideways".parse::<OptimalityKind>().is_err());
    }
}
