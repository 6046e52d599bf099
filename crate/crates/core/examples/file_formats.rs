//! Round-trip instances and orientations through their JSON files.

use chore_orient::efx::solve;
use chore_orient::instance::{ChoreInstance, Orientation};
use chore_orient::oracle::{check_orientation, Criterion};

const INSTANCE: &str = r#"{
  "vertex_count": 3,
  "edges": [
    {"u": 0, "v": 1, "util_u": -1, "util_v": -1},
    {"u": 1, "v": 2, "util_u": 0, "util_v": -2},
    {"u": 2, "v": 2, "util_u": 0, "util_v": 0}
  ]
}"#;

fn main() -> chore_orient::Result<()> {
    let instance = ChoreInstance::from_json(INSTANCE)?;
    let orientation = solve(&instance)?.expect("orientable");
    let text = orientation.to_json();
    println!("{text}");
    let parsed = Orientation::from_json(&text)?;
    println!(
        "EFX0: {}",
        check_orientation(&instance, &parsed, Criterion::Efx0)?
    );

    match ChoreInstance::from_json(
        r#"{"vertex_count": 2, "edges": [{"u": 0, "v": 5, "util_u": 0, "util_v": 0}]}"#,
    ) {
        Ok(_) => println!("unexpectedly valid"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
