use overpartition::enumerate::{enum_pops, Constraint};
use overpartition::tilings::*;
use overpartition::{Partition, PlaneOverpartition};

#[test]
fn round_trip_small_pops() {
    for pop in enum_pops(&Constraint::All, 6) {
        let w = Window::fitting(&pop);
        let t = pop_to_tiling(&pop, w).unwrap();
        assert_eq!(tiling_to_pop(&t).unwrap(), pop, "{pop}");
        let wide = Window {
            t_min: w.t_min - 2,
            t_max: w.t_max + 1,
            x_min: w.x_min - 1,
            x_max: w.x_max + 2,
        };
        assert_eq!(
            tiling_to_pop(&pop_to_tiling(&pop, wide).unwrap()).unwrap(),
            pop
        );
    }
}

#[test]
fn local_moves_match_recomputation() {
    let mut legal = 0;
    for pop in enum_pops(&Constraint::All, 5) {
        let w = Window::for_shape(&pop.shape(), pop.largest() + 1);
        let t = pop_to_tiling(&pop, w).unwrap();
        for (pt, px) in w.points() {
            for mv in Move::all_at(pt, px) {
                let by_tiling = local_move(&t, mv).ok();
                let by_pop = apply_move_to_pop(&pop, mv).map(|q| pop_to_tiling(&q, w).unwrap());
                assert_eq!(by_tiling, by_pop, "{pop} {mv:?}");
                if let Some(t2) = by_tiling {
                    assert_eq!(t.diff(&t2).len(), 2);
                    legal += 1;
                }
            }
        }
    }
    assert!(legal > 0);
}

#[test]
fn boundary_conditions_hold_on_shape_and_bound() {
    for shape in Partition::all_up_to(5) {
        for n in 1..=4u32 {
            let max_weight = shape.weight() * n as u64;
            let pops: Vec<PlaneOverpartition> =
                enum_pops(&Constraint::Shape(shape.clone()), max_weight)
                    .into_iter()
                    .filter(|p| p.largest() <= n)
                    .collect();
            let w = Window::for_shape(&shape, n);
            for pop in pops {
                let t = pop_to_tiling(&pop, w).unwrap();
                assert!(boundary_violations(&t, &shape, n).is_empty(), "{pop} n={n}");
            }
        }
    }
}

#[test]
fn boundary_conditions_detect_other_shapes_and_bounds() {
    let pops = enum_pops(&Constraint::All, 5);
    for shape in Partition::all_up_to(3) {
        for n in 1..=3u32 {
            let w = Window::for_shape(&shape, n);
            for pop in &pops {
                let Ok(t) = pop_to_tiling(pop, w) else {
                    continue;
                };
                let inside = pop.shape() == shape && pop.largest() <= n;
                assert_eq!(
                    boundary_violations(&t, &shape, n).is_empty(),
                    inside,
                    "{pop} {shape:?} n={n}"
                );
            }
        }
    }
}

#[test]
fn worked_instance_uses_every_domino_type() {
    let pop = PlaneOverpartition::parse("7 4 3' 2 2'/3 3 3' 2'/3' 2 1'/2").unwrap();
    let t = pop_to_tiling(&pop, Window::for_shape(&pop.shape(), 7)).unwrap();
    let svg = render(&t, RenderFormat::Svg);
    for class in ["pp", "mm", "pm", "mp"] {
        assert!(svg.contains(&format!(r#"class="{class}""#)), "{class}");
    }
    assert_eq!(svg, render(&t, RenderFormat::Svg));
    assert_eq!(
        render(&t, RenderFormat::Ascii),
        render(&t, RenderFormat::Ascii)
    );
}
