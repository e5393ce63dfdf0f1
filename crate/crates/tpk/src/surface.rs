use std::collections::{BTreeMap, HashMap, VecDeque};

use thiserror::Error;

use crate::braid::Matching;
use crate::linkdiag::UnionFind;
use crate::triplane::{is_crossingless, patch_counts, TriPlaneDiagram};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SurfaceError {
    #[error("edge {0} has {1} face incidences, expected 2")]
    NotASurface(usize, usize),
}

/// Which tangle an edge lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tangle {
    P12,
    P23,
    P31,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub tangle: Tangle,
    /// puncture endpoints with a < b
    pub a: usize,
    pub b: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    /// sector 0,1,2 = L1,L2,L3
    pub sector: usize,
    /// cyclic boundary: (edge index, traversed from edge.a to edge.b)
    pub boundary: Vec<(usize, bool)>,
}

/// The closed surface K(𝒫) as a CW complex: 2b punctures, 3b tangle arcs,
/// one disk per unlink component per sector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceComplex {
    pub vertices: usize,
    pub edges: Vec<Edge>,
    pub faces: Vec<Face>,
}

/// Sector i is bounded by two tangles; the face walk alternates their
/// matchings starting with the first listed tangle.
fn sector_tangles(sector: usize) -> (Tangle, Tangle) {
    match sector {
        0 => (Tangle::P12, Tangle::P31),
        1 => (Tangle::P23, Tangle::P12),
        _ => (Tangle::P31, Tangle::P23),
    }
}

pub fn build_complex(t: &TriPlaneDiagram) -> SurfaceComplex {
    let b = t.bridges();
    let vertices = 2 * b;
    let matchings: HashMap<Tangle, Matching> = [
        (Tangle::P12, t.p12().matching()),
        (Tangle::P23, t.p23().matching()),
        (Tangle::P31, t.p31().matching()),
    ]
    .into_iter()
    .collect();
    let mut edges = Vec::new();
    let mut edge_index: HashMap<(Tangle, usize, usize), usize> = HashMap::new();
    for tangle in [Tangle::P12, Tangle::P23, Tangle::P31] {
        for (a, bb) in matchings[&tangle].pairs() {
            edge_index.insert((tangle, a, bb), edges.len());
            edges.push(Edge { tangle, a, b: bb });
        }
    }
    let mut faces = Vec::new();
    for sector in 0..3 {
        let (ta, tb) = sector_tangles(sector);
        let (ma, mb) = (&matchings[&ta], &matchings[&tb]);
        let mut seen = vec![false; vertices + 1];
        for start in 1..=vertices {
            if seen[start] {
                continue;
            }
            // alternating walk from the lowest puncture of the orbit
            let mut boundary = Vec::new();
            let mut cur = start;
            loop {
                for (tangle, m) in [(ta, ma), (tb, mb)] {
                    seen[cur] = true;
                    let next = m.pair(cur);
                    seen[next] = true;
                    let (lo, hi) = (cur.min(next), cur.max(next));
                    boundary.push((edge_index[&(tangle, lo, hi)], cur < next));
                    cur = next;
                }
                if cur == start {
                    break;
                }
            }
            faces.push(Face { sector, boundary });
        }
    }
    let c = SurfaceComplex { vertices, edges, faces };
    debug_assert_eq!(c.edges.len(), 3 * b);
    let (c1, c2, c3) = patch_counts(t);
    debug_assert_eq!(c.faces.len(), c1 + c2 + c3);
    c
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentSummary {
    pub chi: i64,
    pub orientable: bool,
    pub type_name: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceSummary {
    pub components: Vec<ComponentSummary>,
}

impl SurfaceSummary {
    pub fn total_chi(&self) -> i64 {
        self.components.iter().map(|c| c.chi).sum()
    }

    pub fn all_orientable(&self) -> bool {
        self.components.iter().all(|c| c.orientable)
    }
}

/// Closed-surface classification by (χ, orientability).
pub fn surface_name(chi: i64, orientable: bool) -> String {
    match (chi, orientable) {
        (2, true) => "S²".to_string(),
        (0, true) => "T²".to_string(),
        (1, false) => "RP²".to_string(),
        (0, false) => "Klein bottle".to_string(),
        (chi, true) => format!("genus-{} surface", (2 - chi) / 2),
        (chi, false) => format!("#{} RP²", 2 - chi),
    }
}

pub fn classify(c: &SurfaceComplex) -> Result<SurfaceSummary, SurfaceError> {
    // edge -> its two (face, position) incidences
    let mut incidence: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for (fi, face) in c.faces.iter().enumerate() {
        for (pos, &(ei, _)) in face.boundary.iter().enumerate() {
            incidence.entry(ei).or_default().push((fi, pos));
        }
    }
    for ei in 0..c.edges.len() {
        let n = incidence.get(&ei).map_or(0, |v| v.len());
        if n != 2 {
            return Err(SurfaceError::NotASurface(ei, n));
        }
    }
    // connected components over vertices
    let mut uf = UnionFind::new(c.vertices + 1);
    for e in &c.edges {
        uf.union(e.a, e.b);
    }
    let mut comp_ids: Vec<usize> = Vec::new();
    let mut comp_of_vertex: HashMap<usize, usize> = HashMap::new();
    for v in 1..=c.vertices {
        let r = uf.find(v);
        let id = match comp_ids.iter().position(|&x| x == r) {
            Some(i) => i,
            None => {
                comp_ids.push(r);
                comp_ids.len() - 1
            }
        };
        comp_of_vertex.insert(v, id);
    }
    let ncomp = comp_ids.len();
    let mut v_count = vec![0i64; ncomp];
    let mut e_count = vec![0i64; ncomp];
    let mut f_count = vec![0i64; ncomp];
    for v in 1..=c.vertices {
        v_count[comp_of_vertex[&v]] += 1;
    }
    let mut comp_of_face: Vec<usize> = Vec::new();
    for e in &c.edges {
        e_count[comp_of_vertex[&e.a]] += 1;
    }
    for face in &c.faces {
        let (ei, _) = face.boundary[0];
        let id = comp_of_vertex[&c.edges[ei].a];
        comp_of_face.push(id);
        f_count[id] += 1;
    }
    // orientability: 2-color faces so the two traversals of every edge oppose.
    // Constraint per edge with incidences (f1,d1), (f2,d2): equal directions
    // force opposite colors; a same-face edge with equal directions is a
    // nonorientable identification outright.
    let mut adj: Vec<Vec<(usize, bool)>> = vec![Vec::new(); c.faces.len()]; // (face, same_color)
    let mut orientable = vec![true; ncomp];
    for (&ei, inc) in &incidence {
        let (f1, p1) = inc[0];
        let (f2, p2) = inc[1];
        let d1 = c.faces[f1].boundary[p1].1;
        let d2 = c.faces[f2].boundary[p2].1;
        let same_color = d1 != d2;
        if f1 == f2 {
            if !same_color {
                orientable[comp_of_vertex[&c.edges[ei].a]] = false;
            }
            continue;
        }
        adj[f1].push((f2, same_color));
        adj[f2].push((f1, same_color));
    }
    let mut color: Vec<Option<i8>> = vec![None; c.faces.len()];
    for seed in 0..c.faces.len() {
        if color[seed].is_some() {
            continue;
        }
        color[seed] = Some(1);
        let mut queue = VecDeque::new();
        queue.push_back(seed);
        while let Some(fi) = queue.pop_front() {
            let my = color[fi].unwrap();
            for &(fj, same) in &adj[fi] {
                let want = if same { my } else { -my };
                match color[fj] {
                    None => {
                        color[fj] = Some(want);
                        queue.push_back(fj);
                    }
                    Some(have) => {
                        if have != want {
                            orientable[comp_of_face[fj]] = false;
                        }
                    }
                }
            }
        }
    }
    let mut components = Vec::new();
    for id in 0..ncomp {
        let chi = v_count[id] - e_count[id] + f_count[id];
        let ori = orientable[id];
        components.push(ComponentSummary {
            chi,
            orientable: ori,
            type_name: surface_name(chi, ori),
        });
    }
    Ok(SurfaceSummary { components })
}

pub fn summarize(t: &TriPlaneDiagram) -> Result<SurfaceSummary, SurfaceError> {
    classify(&build_complex(t))
}

/// Crossingless check together with the unknottedness note for orientable
/// surfaces.
pub fn crossingless_report(t: &TriPlaneDiagram) -> (bool, Option<String>) {
    if !is_crossingless(t) {
        return (false, None);
    }
    let note = match summarize(t) {
        Ok(s) if s.all_orientable() => {
            Some("crossingless diagram of an orientable surface: unknotted".to_string())
        }
        _ => None,
    };
    (true, note)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triplane::euler_characteristic;
    use proptest::prelude::*;

    fn tpd(b: usize, w12: &[i32], w23: &[i32], w31: &[i32]) -> TriPlaneDiagram {
        TriPlaneDiagram::from_words(b, w12.to_vec(), w23.to_vec(), w31.to_vec()).unwrap()
    }

    #[test]
    fn trivial_sphere() {
        let t = tpd(1, &[], &[], &[]);
        let c = build_complex(&t);
        assert_eq!(c.vertices, 2);
        assert_eq!(c.edges.len(), 3);
        assert_eq!(c.faces.len(), 3);
        let s = classify(&c).unwrap();
        assert_eq!(s.components.len(), 1);
        assert_eq!(s.components[0].chi, 2);
        assert!(s.components[0].orientable);
        assert_eq!(s.components[0].type_name, "S²");
    }

    #[test]
    fn doubled_trefoil_words_give_two_spheres() {
        let t = tpd(2, &[2, 2, 2], &[2, 2, 2], &[2, 2, 2]);
        let s = summarize(&t).unwrap();
        assert_eq!(s.components.len(), 2);
        for comp in &s.components {
            assert_eq!(comp.type_name, "S²");
        }
        assert_eq!(s.total_chi(), euler_characteristic(&t));
    }

    #[test]
    fn projective_plane_matchings() {
        // pairwise distinct matchings on 4 points: single orbit in each sector
        let t = tpd(2, &[], &[2, 1], &[2]);
        assert_eq!(patch_counts(&t), (1, 1, 1));
        let s = summarize(&t).unwrap();
        assert_eq!(s.components.len(), 1);
        assert_eq!(s.components[0].chi, 1);
        assert!(!s.components[0].orientable);
        assert_eq!(s.components[0].type_name, "RP²");
    }

    #[test]
    fn surface_names() {
        assert_eq!(surface_name(2, true), "S²");
        assert_eq!(surface_name(0, true), "T²");
        assert_eq!(surface_name(-2, true), "genus-2 surface");
        assert_eq!(surface_name(1, false), "RP²");
        assert_eq!(surface_name(0, false), "Klein bottle");
        assert_eq!(surface_name(-3, false), "#5 RP²");
    }

    #[test]
    fn classification_independent_of_face_order() {
        let t = tpd(2, &[], &[2, 1], &[2]);
        let mut c = build_complex(&t);
        let s1 = classify(&c).unwrap();
        c.faces.reverse();
        let s2 = classify(&c).unwrap();
        assert_eq!(s1, s2);
    }

    fn arb_letters(b: usize, max_len: usize) -> impl Strategy<Value = Vec<i32>> {
        let k = (2 * b - 1) as i32;
        prop::collection::vec((1..=k).prop_flat_map(|a| prop_oneof![Just(a), Just(-a)]), 0..max_len)
    }

    proptest! {
        #[test]
        fn euler_characteristic_identity(
            w12 in arb_letters(3, 8), w23 in arb_letters(3, 8), w31 in arb_letters(3, 8)
        ) {
            let t = tpd(3, &w12, &w23, &w31);
            let c = build_complex(&t);
            let s = classify(&c).unwrap();
            prop_assert_eq!(s.total_chi(), euler_characteristic(&t));
            let (c1, c2, c3) = patch_counts(&t);
            prop_assert_eq!(c.vertices as i64 - c.edges.len() as i64 + c.faces.len() as i64,
                (c1 + c2 + c3) as i64 - 3);
        }

        #[test]
        fn every_edge_has_two_face_incidences(
            w12 in arb_letters(3, 6), w23 in arb_letters(3, 6), w31 in arb_letters(3, 6)
        ) {
            let t = tpd(3, &w12, &w23, &w31);
            prop_assert!(classify(&build_complex(&t)).is_ok());
        }
    }
}
