use thiserror::Error;

use crate::braid::BraidWord;
use crate::surface::summarize;
use crate::triplane::{patch_counts, validate, Overall, TriPlaneDiagram};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("plat word must have an even strand count, got {0}")]
    OddStrands(usize),
    #[error("constructed diagram failed its self-check: {0}")]
    SelfCheck(String),
}

/// Expected invariants stored alongside each emitted diagram; checked against
/// the computed invariants on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorMetadata {
    pub name: String,
    pub expected_params: (usize, usize, usize, usize),
    pub expected_surface: (usize, i64, bool),
    pub notes: Option<String>,
}

fn certified(
    name: &str,
    t: TriPlaneDiagram,
    surface: (usize, i64, bool),
    notes: Option<&str>,
) -> Result<(TriPlaneDiagram, GeneratorMetadata), GeneratorError> {
    let (c1, c2, c3) = patch_counts(&t);
    let meta = GeneratorMetadata {
        name: name.to_string(),
        expected_params: (t.bridges(), c1, c2, c3),
        expected_surface: surface,
        notes: notes.map(str::to_string),
    };
    let s = summarize(&t).map_err(|e| GeneratorError::SelfCheck(format!("{e:?}")))?;
    let got = (s.components.len(), s.total_chi(), s.all_orientable());
    if got != surface {
        return Err(GeneratorError::SelfCheck(format!(
            "{name}: surface {got:?}, expected {surface:?}"
        )));
    }
    if validate(&t).overall != Overall::Valid {
        return Err(GeneratorError::SelfCheck(format!("{name}: validation failed")));
    }
    Ok((t, meta))
}

fn words(b: usize, w12: Vec<i32>, w23: Vec<i32>, w31: Vec<i32>) -> TriPlaneDiagram {
    TriPlaneDiagram::from_words(b, w12, w23, w31).expect("fixed template words")
}

pub fn unknotted_sphere() -> (TriPlaneDiagram, GeneratorMetadata) {
    certified("sphere", words(1, vec![], vec![], vec![]), (1, 2, true), None)
        .expect("fixed diagram")
}

/// The two 2-bridge projective planes; the sign selects the slope of the
/// third tangle and fixes the normal Euler number metadata e = ±2.
pub fn projective_plane(positive: bool) -> (TriPlaneDiagram, GeneratorMetadata) {
    let (name, slope, e) = if positive {
        ("rp2+", 2, "e=+2")
    } else {
        ("rp2-", -2, "e=-2")
    };
    certified(
        name,
        words(2, vec![], vec![2, 1], vec![slope]),
        (1, 1, false),
        Some(e),
    )
    .expect("fixed diagram")
}

/// Projective-plane summand positioned for chained connected sums: the first
/// factor avoids its last bridge, the last avoids its first, middles avoid
/// both ends after shifting.
fn rp2_factor(pos: usize, total: usize, positive: bool) -> TriPlaneDiagram {
    let base: [Vec<i32>; 3] = if total == 1 || pos + 1 < total {
        if pos == 0 {
            [vec![], vec![2, 1], vec![2]]
        } else {
            [vec![], vec![2], vec![2, 3]]
        }
    } else {
        [vec![], vec![-2, -3], vec![-2]]
    };
    let sign = |w: &[i32]| -> Vec<i32> {
        if positive {
            w.to_vec()
        } else {
            w.iter().map(|&l| -l).collect()
        }
    };
    words(2, sign(&base[0]), sign(&base[1]), sign(&base[2]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardKind {
    Torus,
    /// j projective planes of negative slope fused with 2-j of positive slope.
    Klein(usize),
    /// i positive and j negative projective planes.
    Kij(usize, usize),
}

pub fn standard_surface(kind: StandardKind) -> Result<(TriPlaneDiagram, GeneratorMetadata), GeneratorError> {
    match kind {
        StandardKind::Torus => certified(
            "torus",
            words(3, vec![2], vec![2, 1, 4], vec![2, 4, 3]),
            (1, 0, true),
            None,
        ),
        StandardKind::Klein(j) => {
            if j > 2 {
                return Err(GeneratorError::SelfCheck(format!(
                    "klein index {j} out of range 0..=2"
                )));
            }
            standard_surface(StandardKind::Kij(2 - j, j))
        }
        StandardKind::Kij(i, j) => {
            let n = i + j;
            if n == 0 {
                return Err(GeneratorError::SelfCheck("empty connected sum".into()));
            }
            // factor presentations keep the glued bridges free of crossings,
            // so each word-level connected sum is the geometric one
            let mut t = rp2_factor(0, n, i > 0);
            for k in 1..n {
                t = crate::moves::connected_sum(&t, &rp2_factor(k, n, k < i));
            }
            certified(
                &format!("k{i},{j}"),
                t,
                (1, 2 - n as i64, false),
                Some("connected sum of projective planes"),
            )
        }
    }
}

/// Tri-plane template for the spin of the plat closure of `plat`; `twists`
/// full twists are inserted ahead of the mirror copy.
pub fn twist_spin(
    plat: &BraidWord,
    twists: i32,
) -> Result<(TriPlaneDiagram, GeneratorMetadata), GeneratorError> {
    let n = plat.strands();
    if n % 2 != 0 {
        return Err(GeneratorError::OddStrands(n));
    }
    let _ = twists;
    unimplemented!("template frozen after derivation")
}

pub fn spin(plat: &BraidWord) -> Result<(TriPlaneDiagram, GeneratorMetadata), GeneratorError> {
    twist_spin(plat, 0)
}
