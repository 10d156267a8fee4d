//! Connectivity as orbit equivalence, machine-checked.
//!
//! Each vertex is sent to its full set of path labels — one vector per
//! vertex of its component. Label vectors act on these images by
//! translation, and two vertices are connected exactly when some vector
//! translates one image onto the other. The example computes the whole
//! table, inspects a witness, verifies the equivalence for every vertex
//! pair, and then doctors the table to show the verifier catching it.
//!
//! Run with: `cargo run --example orbit_reduction`

use fbr::forest::{assert_forest, path_label};
use fbr::labeling::LabeledGraph;
use fbr::reduction::{
    orbit_equivalent, reduce_all, translate, verify_reduction_table, ReductionPoint,
};

fn main() -> fbr::Result<()> {
    // Two components: a path a-b-c-d and an edge x-y.
    let vertices = ["a", "b", "c", "d", "x", "y"].map(String::from).to_vec();
    let edges = vec![
        ("a".into(), "b".into(), "e1".into()),
        ("b".into(), "c".into(), "e2".into()),
        ("c".into(), "d".into(), "e3".into()),
        ("x".into(), "y".into(), "e4".into()),
    ];
    let graph = LabeledGraph::<f64>::new(vertices, edges, None)?;
    let forest = assert_forest(&graph)?;
    let labels = forest.labels();

    // f(v) for every vertex: the map y -> p(v, y) over its component.
    let table = reduce_all(&forest)?;
    for (v, point) in table.iter().enumerate() {
        let entries: Vec<String> = point
            .entries()
            .iter()
            .map(|(y, h)| format!("({}, {})", h.display(labels), forest.vertex_name(*y)))
            .collect();
        println!("f({}) = {{ {} }}", forest.vertex_name(v), entries.join(", "));
    }

    // Same component: equivalent, and the translator is p(c, a).
    let a = forest.vertex_index("a")?;
    let c = forest.vertex_index("c")?;
    let witness = orbit_equivalent(&table[a], &table[c])?;
    println!(
        "\nf(a) ~ f(c): {} with translator {}",
        witness.equivalent,
        witness.translator.as_ref().unwrap().display(labels)
    );
    let expected = path_label(&forest, c, a)?.vector;
    println!(
        "translator equals p(c, a) = {}: {}",
        expected.display(labels),
        *witness.translator.as_ref().unwrap() == expected
    );
    // Applying it really does carry f(a) onto f(c).
    let moved = translate(&table[a], &witness.translator.unwrap())?;
    println!("translate(f(a), p(c,a)) == f(c): {}", moved == table[c]);

    // Different components: never equivalent.
    let x = forest.vertex_index("x")?;
    let cross = orbit_equivalent(&table[a], &table[x])?;
    println!("f(a) ~ f(x): {}", cross.equivalent);

    // The verifier checks the biconditional for every ordered pair and
    // re-applies each claimed translator.
    let honest = verify_reduction_table(&forest, &table)?;
    println!("\nhonest table: {}", if honest.ok() { "verified" } else { "rejected" });

    // Doctor one entry of f(a) and watch the verifier object.
    let mut entries = table[a].entries().clone();
    let bend = path_label(&forest, a, forest.vertex_index("b")?)?.vector;
    entries.insert(c, entries[&c].add(&bend)?);
    let mut doctored = table.clone();
    doctored[a] = ReductionPoint::assemble(&forest, a, entries)?;
    let report = verify_reduction_table(&forest, &doctored)?;
    println!("doctored table: {}", if report.ok() { "verified" } else { "rejected" });
    for violation in report.violations.iter().take(3) {
        println!("  {} at ({})", violation.axiom, violation.witness.join(", "));
    }
    Ok(())
}
