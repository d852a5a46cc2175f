use std::time::{Duration, Instant};
use surfemb::search::{embeds_on, min_nonorientable_genus, min_orientable_genus, SearchBudget};
use surfemb::{complete_graph, SurfaceSpec};

fn budget() -> SearchBudget {
    SearchBudget::new(u64::MAX / 2, Duration::from_secs(1800), 1)
}

#[test]
fn timing_k7() {
    let k7 = complete_graph(7);
    let t = Instant::now();
    let g = min_orientable_genus(&k7, budget()).unwrap();
    println!("K7 orientable genus {:?} in {:?}", g.genus(), t.elapsed());
    assert_eq!(g.genus(), Some(1));

    let t = Instant::now();
    let out = embeds_on(&k7, SurfaceSpec::nonorientable(2).unwrap(), budget()).unwrap();
    println!("K7 on N2: not-embeddable={} in {:?}", out.is_not_embeddable(), t.elapsed());
    assert!(out.is_not_embeddable());

    let t = Instant::now();
    let g = min_nonorientable_genus(&k7, budget()).unwrap();
    println!("K7 nonorientable genus {:?} in {:?}", g.genus(), t.elapsed());
    assert_eq!(g.genus(), Some(3));
}
