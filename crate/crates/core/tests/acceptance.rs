//! One check per acceptance criterion. Prints a PASS/FAIL line for each and
//! exits non-zero if any fails.

mod common;

use std::time::{Duration, Instant};

use rzpoly::corpus;
use rzpoly::hrep::{lift_point, relation_matrix, verify_nondegeneracy};
use rzpoly::moves::{
    prismatic_circuits, psc_flip_certificate, recognize_vertexcut_reducible,
    simplex_facet_collapse, verify_flip_certificate, vertex_cut, FlipSearch,
};
use rzpoly::polytope::{combinatorial_isomorphic, facet_graph};
use rzpoly::zcomplex::{
    build_chamber_complex, classify_edge_types, connected_components, doubling_filtration,
    euler_characteristic, fixed_point_components, orientability, EdgeType,
};
use rzpoly::CombPolytope;

type Check = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Check);

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn corpus_3d() -> Vec<CombPolytope> {
    let mut all = common::small_simple_polytopes(9);
    all.push(corpus::cube(3));
    all.push(corpus::prism(5));
    all.push(corpus::dodecahedron());
    all
}

fn random_vertexcut_positive() -> Check {
    for seed in 0..100u64 {
        let k = 1 + (seed % 12) as usize;
        let p = corpus::random_vertex_cuts(k, seed);
        let r = recognize_vertexcut_reducible(&p).map_err(|e| e.to_string())?;
        ensure(r.reducible, || format!("seed {seed}: verdict NO"))?;
        let end = r.trace.replay().map_err(|e| e.to_string())?;
        ensure(end.is_simplex(), || format!("seed {seed}: replay misses Δ³"))?;
        let rebuilt = r.trace.replay_as_vertex_cuts().map_err(|e| e.to_string())?;
        ensure(combinatorial_isomorphic(&rebuilt, &p).is_some(), || {
            format!("seed {seed}: reversed trace not isomorphic")
        })?;
    }
    Ok("100 seeds YES, traces replay".into())
}

fn negative_verdicts() -> Check {
    let cube = corpus::cube(3);
    let cases = [
        ("cube", cube.clone()),
        ("cut cube", vertex_cut(&cube, 0).unwrap()),
        ("dodecahedron", corpus::dodecahedron()),
    ];
    for (name, p) in &cases {
        let r = recognize_vertexcut_reducible(p).map_err(|e| e.to_string())?;
        ensure(!r.reducible, || format!("{name}: verdict YES"))?;
    }
    Ok("cube, cut cube, dodecahedron all NO".into())
}

fn greedy_vs_exhaustive() -> Check {
    let all = common::small_simple_polytopes(9);
    let mut yes = 0;
    for p in &all {
        let greedy = recognize_vertexcut_reducible(p).map_err(|e| e.to_string())?.reducible;
        let exhaustive = common::exhaustive_reducible(p);
        ensure(greedy == exhaustive, || format!("disagree on {p:?}"))?;
        yes += usize::from(greedy);
    }
    Ok(format!("{} polytopes, {yes} reducible", all.len()))
}

fn andreev_contrast() -> Check {
    let count = |p: &CombPolytope, k| prismatic_circuits(p, k).map(|c| c.len()).map_err(|e| e.to_string());
    let dodeca = corpus::dodecahedron();
    ensure(count(&dodeca, 3)? == 0 && count(&dodeca, 4)? == 0, || {
        "dodecahedron has prismatic circuits".into()
    })?;
    ensure(!recognize_vertexcut_reducible(&dodeca).unwrap().reducible, || {
        "dodecahedron recognized".into()
    })?;
    let prism = count(&corpus::prism(3), 3)?;
    ensure(prism == 1, || format!("prism: {prism} prismatic 3-circuits"))?;
    let cube = count(&corpus::cube(3), 4)?;
    ensure(cube == 3, || format!("cube: {cube} prismatic 4-circuits"))?;
    Ok("dodecahedron 0/0, prism 1, cube 3".into())
}

fn simplex_sphere() -> Check {
    for n in 1..=3usize {
        let h = corpus::simplex_hrep(n);
        let q = relation_matrix(&h).map_err(|e| e.to_string())?;
        ensure(q.gamma() == [vec![1.0; n + 1]] && q.rhs() == [1.0], || {
            format!("n={n}: system {:?} = {:?}", q.gamma(), q.rhs())
        })?;
        let z = build_chamber_complex(&CombPolytope::simplex(n)).map_err(|e| e.to_string())?;
        let chi = euler_characteristic(&z);
        let expected = 1 + if n % 2 == 0 { 1 } else { -1 };
        ensure(chi == expected, || format!("n={n}: χ = {chi}"))?;
        ensure(connected_components(&z) == 1, || format!("n={n}: disconnected"))?;
        let bary = vec![1.0 / (n as f64 + 1.0); n];
        let y = lift_point(&h, &bary, &vec![1; n + 1]).map_err(|e| e.to_string())?;
        let target = 1.0 / ((n + 1) as f64).sqrt();
        ensure(y.y.iter().all(|v| (v - target).abs() <= 1e-9), || {
            format!("n={n}: lift {:?}", y.y)
        })?;
    }
    Ok("n = 1, 2, 3".into())
}

fn cube_torus() -> Check {
    let h = corpus::cube_hrep(3);
    let q = relation_matrix(&h).map_err(|e| e.to_string())?;
    let mut rows: Vec<Vec<f64>> = q.gamma().to_vec();
    rows.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let expected: Vec<Vec<f64>> = (0..3)
        .map(|i| (0..6).map(|k| if k == i || k == i + 3 { 1.0 } else { 0.0 }).collect())
        .collect();
    ensure(rows == expected && q.rhs() == [1.0, 1.0, 1.0], || {
        format!("system {:?} = {:?}", q.gamma(), q.rhs())
    })?;
    let report = verify_nondegeneracy(&h, 1000, 7).map_err(|e| e.to_string())?;
    ensure(report.samples >= 1000 && report.passed() && report.min_rank == 3, || {
        format!("rank {} over {} samples", report.min_rank, report.samples)
    })?;
    let z = build_chamber_complex(&corpus::cube(3)).map_err(|e| e.to_string())?;
    ensure(euler_characteristic(&z) == 0, || "χ ≠ 0".into())?;
    for i in 0..6 {
        let c = fixed_point_components(&z, i).map_err(|e| e.to_string())?.components;
        ensure(c == 2, || format!("facet {i}: {c} fixed components"))?;
    }
    Ok(format!("rank 3 at {} samples", report.samples))
}

fn cell_and_filtration_laws() -> Check {
    for (name, p) in [
        ("simplex", CombPolytope::simplex(3)),
        ("cube", corpus::cube(3)),
        ("prism", corpus::prism(3)),
    ] {
        let z = build_chamber_complex(&p).map_err(|e| e.to_string())?;
        let m = p.facet_count();
        for f in 0..z.lattice().len() {
            let k = z.lattice().face(f).facets.len();
            ensure(z.cells_over(f).len() == 1 << (m - k), || format!("{name}: face {f}"))?;
        }
        let stages = doubling_filtration(&z);
        for s in &stages {
            ensure(s.facets.len() == (m - s.j) << s.j, || format!("{name} j={}: facets", s.j))?;
            ensure(s.boundary_identity_holds, || format!("{name} j={}: boundary", s.j))?;
            ensure(s.j == m || s.doubling_holds == Some(true), || {
                format!("{name} j={}: doubling", s.j)
            })?;
        }
        ensure(stages[m].boundary_cells.is_empty(), || format!("{name}: top stage has boundary"))?;
    }
    Ok("Δ³, cube, prism".into())
}

fn edge_typing() -> Check {
    for (name, p) in [("simplex", CombPolytope::simplex(3)), ("cube", corpus::cube(3))] {
        let z = build_chamber_complex(&p).map_err(|e| e.to_string())?;
        for s in doubling_filtration(&z).iter().filter(|s| s.j >= 1) {
            let c = classify_edge_types(&z, s);
            ensure(c.untagged.is_empty(), || format!("{name} j={}: untagged", s.j))?;
            let mut cells: Vec<usize> = c.edges.iter().map(|e| e.cell).collect();
            cells.sort_unstable();
            cells.dedup();
            ensure(cells.len() == c.edges.len(), || format!("{name} j={}: double tag", s.j))?;
            for e in &c.edges {
                let (k, i) = e.face;
                ensure(e.kind != EdgeType::TypeII || (k < s.j && s.j <= i), || {
                    format!("{name} j={}: Type-II over ({k},{i})", s.j)
                })?;
            }
            // per edge {a,b} of P: both above the stage gives 2^j Type-I
            // cells, one below gives 2^(j-1) Type-II cells
            let (mut t1, mut t2) = (0, 0);
            for &(a, b) in facet_graph(&p).edges() {
                let below = usize::from(a < s.j) + usize::from(b < s.j);
                match below {
                    0 => t1 += 1 << s.j,
                    1 => t2 += 1 << (s.j - 1),
                    _ => {}
                }
            }
            ensure((c.type1, c.type2) == (t1, t2), || {
                format!("{name} j={}: got ({}, {}), expected ({t1}, {t2})", s.j, c.type1, c.type2)
            })?;
        }
    }
    Ok("Δ³ and cube, every stage".into())
}

fn orientation_witness() -> Check {
    let mut polys = corpus_3d();
    polys.extend((1..=4).map(CombPolytope::simplex));
    polys.push(common::polygon(5));
    for p in &polys {
        let z = build_chamber_complex(p).map_err(|e| e.to_string())?;
        ensure(orientability(&z).orientable, || format!("not orientable: {p:?}"))?;
    }
    Ok(format!("{} complexes", polys.len()))
}

fn flip_certificates() -> Check {
    let prism = corpus::prism(3);
    match psc_flip_certificate(&prism, 3, 100_000).map_err(|e| e.to_string())? {
        FlipSearch::Certificate(moves) => {
            ensure(moves.len() == 1 && moves[0].codim == 3, || format!("prism: {moves:?}"))?;
            ensure(verify_flip_certificate(&prism, &moves).unwrap(), || "prism replay".into())?;
        }
        other => return Err(format!("prism: {other:?}")),
    }
    for n in 2..=4 {
        let s = psc_flip_certificate(&CombPolytope::simplex(n), 3, 100_000).map_err(|e| e.to_string())?;
        ensure(s == FlipSearch::Certificate(Vec::new()), || format!("Δ{n}: {s:?}"))?;
    }
    let cube = psc_flip_certificate(&corpus::cube(3), 3, 100_000).map_err(|e| e.to_string())?;
    ensure(matches!(cube, FlipSearch::NoneWithinBound { depth: 3, .. }), || {
        format!("cube: {cube:?}")
    })?;
    Ok("prism 1 move, simplices empty, cube none within depth 3".into())
}

fn round_trip() -> Check {
    let polys = corpus_3d();
    let mut checked = 0;
    for p in &polys {
        for v in 0..p.vertex_count() {
            let cut = vertex_cut(p, v).map_err(|e| e.to_string())?;
            let back = simplex_facet_collapse(&cut, cut.facet_count() - 1).map_err(|e| e.to_string())?;
            ensure(combinatorial_isomorphic(&back, p).is_some(), || format!("vertex {v} of {p:?}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} vertices over {} polytopes", polys.len()))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("random vertex-cuts recognized", Duration::from_secs(10), random_vertexcut_positive),
        ("negative verdicts", Duration::from_secs(1), negative_verdicts),
        ("greedy equals exhaustive", Duration::from_secs(60), greedy_vs_exhaustive),
        ("prismatic circuit contrast", Duration::from_secs(1), andreev_contrast),
        ("simplex gives a sphere", Duration::from_secs(1), simplex_sphere),
        ("cube gives a torus", Duration::from_secs(5), cube_torus),
        ("cell count and filtration laws", Duration::from_secs(5), cell_and_filtration_laws),
        ("edge typing", Duration::from_secs(5), edge_typing),
        ("orientation witness", Duration::from_secs(5), orientation_witness),
        ("flip certificates", Duration::from_secs(30), flip_certificates),
        ("cut/collapse round trip", Duration::from_secs(5), round_trip),
    ];
    let mut failed = 0;
    for (i, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= *limit => (true, d),
            Ok(d) => (false, format!("{d}; over time limit {limit:?}")),
            Err(e) => (false, e),
        };
        failed += usize::from(!ok);
        println!(
            "criterion {:>2} {}: {} ({:.2?}) {}",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            name,
            elapsed,
            detail
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
