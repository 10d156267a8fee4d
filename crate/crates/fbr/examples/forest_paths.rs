//! Path labels on a forest and their algebra.
//!
//! Every oriented edge contributes `+1` of its label when crossed
//! tail-to-head and `-1` the other way, so each ordered pair of
//! vertices in a component gets one signed label vector — the path
//! label. The example walks a two-component forest, shows composition
//! (telescoping), anti-symmetry, the refusal across components, and the
//! separation bound that a stretched labeling buys.
//!
//! Run with: `cargo run --example forest_paths`

use fbr::forest::{assert_forest, compose, path_label, separation};
use fbr::labeling::{stretch_labeling, LabeledGraph};

fn main() -> fbr::Result<()> {
    //   a - b - c - d   (component 0, with a fork at b)
    //       |
    //       e
    //   f - g           (component 1)
    let vertices = ["a", "b", "c", "d", "e", "f", "g"]
        .map(String::from)
        .to_vec();
    let edges = vec![
        ("a".into(), "b".into(), "ab".into()),
        ("b".into(), "c".into(), "bc".into()),
        ("c".into(), "d".into(), "cd".into()),
        ("b".into(), "e".into(), "be".into()),
        ("f".into(), "g".into(), "fg".into()),
    ];
    let graph = LabeledGraph::<f64>::new(vertices, edges, None)?;

    // Cyclic inputs are refused with a witness; this one is a forest.
    let forest = assert_forest(&graph)?;
    println!("components: {}", forest.component_count());

    let labels = forest.labels();
    let name = |v: &str| forest.vertex_index(v).unwrap();

    let ad = path_label(&forest, name("a"), name("d"))?;
    println!("p(a, d) = {}", ad.vector.display(labels));
    let da = path_label(&forest, name("d"), name("a"))?;
    println!("p(d, a) = {}   (anti-symmetry: p(d,a) = -p(a,d) is {})",
        da.vector.display(labels),
        da.vector == ad.vector.neg()
    );

    // Composition telescopes: p(a, c) + p(c, d) = p(a, d).
    let ac = path_label(&forest, name("a"), name("c"))?;
    let cd = path_label(&forest, name("c"), name("d"))?;
    let composed = compose(&ac, &cd)?;
    println!(
        "p(a, c) + p(c, d) = {}   (telescoping holds: {})",
        composed.vector.display(labels),
        composed == ad
    );

    // The fork shows that labels record the path, not just its length.
    let ae = path_label(&forest, name("a"), name("e"))?;
    println!("p(a, e) = {}", ae.vector.display(labels));

    // Across components there is no path and no label.
    match path_label(&forest, name("a"), name("f")) {
        Err(e) => println!("p(a, f): refused — {e}"),
        Ok(_) => unreachable!("a and f are not connected"),
    }

    // Under a stretched labeling, the labels seen from any root are
    // uniformly separated in the transport norm: at least epsilon / 2.
    let labeling = stretch_labeling(&graph)?;
    println!("\nstretch constant epsilon = {}", labeling.epsilon);
    for root in ["a", "b", "f"] {
        match separation(&forest, &labeling, name(root))? {
            Some(s) => println!("separation from root {root}: {s}"),
            None => println!("separation from root {root}: vacuous (singleton component)"),
        }
    }
    Ok(())
}
