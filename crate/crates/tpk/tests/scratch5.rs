use tpk::banded::{resolve, Band, BandedUnlink, Side};
use tpk::braid::{plat_matching, BraidWord, Matching};
use tpk::group::{abelianization, count_homs, presentation_from_banded};
use tpk::linkdiag::{certify_unlink, component_count, plat_union};
use tpk::triplane::canonical_lift;

fn is_trefoil(p: &tpk::group::GroupPresentation) -> bool {
    let abx = abelianization(p);
    abx.free_rank == 1
        && abx.torsion.is_empty()
        && count_homs(p, 3).unwrap() == 12
        && count_homs(p, 4).unwrap() == 96
}

// 2-cable of braid letter k on 2n strands: strands 2k-1,2k,2k+1,2k+2
fn double_letter(k: i32) -> Vec<i32> {
    let s = k.signum();
    let a = 2 * k.abs();
    if s > 0 {
        vec![a, a - 1, a + 1, a]
    } else {
        vec![-a, -(a - 1), -(a + 1), -a]
    }
}

fn double_word(w: &[i32]) -> Vec<i32> {
    w.iter().flat_map(|&l| double_letter(l)).collect()
}

#[test]
fn derive_template() {
    // nested doubled caps: partners (14)(23)(58)(67)
    let m = Matching::from_partners(vec![4, 3, 2, 1, 8, 7, 6, 5]);
    let nest = canonical_lift(&m);
    println!("nest letters {:?}", nest.letters());
    let dbeta = double_word(&[2, 2, 2]);
    println!("doubled braid {:?}", dbeta);
    let forms: Vec<(&str, Vec<i32>, Vec<i32>)> = vec![
        ("nest/nest+D", nest.letters().to_vec(), [nest.letters().to_vec(), dbeta.clone()].concat()),
        ("nest/D+nest", nest.letters().to_vec(), [dbeta.clone(), nest.letters().to_vec()].concat()),
        ("nest+D/nest", [nest.letters().to_vec(), dbeta.clone()].concat(), nest.letters().to_vec()),
        ("D+nest/nest", [dbeta.clone(), nest.letters().to_vec()].concat(), nest.letters().to_vec()),
        ("nest+D/nest+D", [nest.letters().to_vec(), dbeta.clone()].concat(), [nest.letters().to_vec(), dbeta.clone()].concat()),
    ];
    for (name, a, b) in &forms {
        let (Ok(w12), Ok(w31)) = (BraidWord::new(8, a.clone()), BraidWord::new(8, b.clone())) else {
            println!("{name}: bad word");
            continue;
        };
        let l = plat_union(&w12, &w31).unwrap();
        let cc = component_count(&l).unwrap();
        let cert = certify_unlink(&l, Some(2));
        println!("{name}: L comps={cc} cert={:?}", cert.is_certified());
        if cc != 2 || !cert.is_certified() {
            continue;
        }
        // fusion candidates: flat-ish bands joining the two components
        for u in [
            Band::flat(4, 5).unwrap(),
            Band::new(4, 5, vec![], 1).unwrap(),
            Band::new(4, 5, vec![], -1).unwrap(),
            Band::new(3, 6, vec![(4, Side::Over), (5, Side::Over)], 0).unwrap(),
            Band::new(3, 6, vec![(4, Side::Under), (5, Side::Under)], 0).unwrap(),
            Band::flat(2, 7).unwrap(),
        ] {
            let Ok(one) = BandedUnlink::new(4, w12.clone(), w31.clone(), vec![u.clone()]) else { continue };
            let r = resolve(&one);
            if component_count(&r).unwrap_or(0) != 1 {
                continue;
            }
            let Ok(p) = presentation_from_banded(&one) else { continue };
            let ab = abelianization(&p);
            let s3 = count_homs(&p, 3).unwrap_or(0);
            let tref = is_trefoil(&p);
            println!("  {name} u=({},{},{}) ab=({},{:?}) s3={s3} trefoil={tref}",
                u.lo(), u.hi(), u.curls(), ab.free_rank, ab.torsion);
        }
    }
    // also check: what does plat matching of nest alone look like
    let pm = plat_matching(&BraidWord::new(8, nest.letters().to_vec()).unwrap()).unwrap();
    println!("nest matching {:?}", (1..=8).map(|p| pm.pair(p)).collect::<Vec<_>>());
}
