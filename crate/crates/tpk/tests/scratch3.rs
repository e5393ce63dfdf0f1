use tpk::moves::{default_site, stabilize, StabSite};
use tpk::triplane::{patch_counts, validate, Overall, TriPlaneDiagram};
use tpk::braid::plat_matching;

#[test]
fn site_scan() {
    let t0 = TriPlaneDiagram::from_words(1, vec![], vec![], vec![]).unwrap();
    let t1 = stabilize(&t0, 1, default_site(&t0, 1).unwrap()).unwrap();
    println!("t1 words {:?} {:?} {:?}", t1.p12().word().letters(), t1.p23().word().letters(), t1.p31().word().letters());
    let ms = [
        plat_matching(t1.p12().word()).unwrap(),
        plat_matching(t1.p23().word()).unwrap(),
        plat_matching(t1.p31().word()).unwrap(),
    ];
    for (i, m) in ms.iter().enumerate() {
        println!("m{} {:?}", i, (1..=4).map(|p| m.pair(p)).collect::<Vec<_>>());
    }
    for sector in 1..=3usize {
        for x in 1..=4usize {
            for y in 1..=4usize {
                if x == y { continue; }
                let Ok(t2) = stabilize(&t1, sector, StabSite { x, y }) else { continue };
                let r = validate(&t2);
                let ok = r.overall != Overall::Invalid;
                println!("sector {sector} site ({x},{y}) -> {:?} {}", patch_counts(&t2), if ok { "OK" } else { "INVALID" });
            }
        }
    }
}
