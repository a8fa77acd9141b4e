//! Morphs a small articulated arm between two poses. Link lengths stay
//! fixed for every `t`.

use isomorph::{morph_skeleton_sequence, Point, Skeleton};

fn main() -> isomorph::Result<()> {
    let parent = vec![None, Some(0), Some(1), Some(2), Some(1)];
    let rest = Skeleton::new(
        vec![
            Point::new(0.0, 0.0, 0.0),
            Point::new(0.0, 0.0, 1.0),
            Point::new(1.0, 0.0, 1.0),
            Point::new(2.0, 0.0, 1.0),
            Point::new(-1.0, 0.0, 1.0),
        ],
        parent.clone(),
    )?;
    let raised = Skeleton::new(
        vec![
            Point::new(0.0, 0.0, 0.0),
            Point::new(0.0, 0.0, 1.0),
            Point::new(0.0, 0.0, 2.0),
            Point::new(1.0, 0.0, 2.0),
            Point::new(-1.0, 0.0, 1.0),
        ],
        parent,
    )?;
    for pose in morph_skeleton_sequence(&rest, &raised, 5, false)? {
        let lengths: Vec<String> = pose
            .skeleton
            .link_lengths()
            .iter()
            .map(|l| format!("{l:.12}"))
            .collect();
        println!(
            "t = {:.2}  hand at {:?}  links [{}]",
            pose.t.unwrap(),
            pose.skeleton.joints()[3].coords.as_slice(),
            lengths.join(", ")
        );
    }
    Ok(())
}
