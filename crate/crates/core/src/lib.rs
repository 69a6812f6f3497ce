pub mod closed_forms;
pub mod compute;
pub mod cuts;
pub mod distance;
pub mod error;
pub mod families;
pub mod fit;
pub mod graph;
pub mod lattice;
pub mod poly;
pub mod verify;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod ch01 {}
    #[doc = include_str!("../../../book/src/distances.md")]
    mod ch02 {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod ch03 {}
    #[doc = include_str!("../../../book/src/cuts.md")]
    mod ch04 {}
    #[doc = include_str!("../../../book/src/closed_forms.md")]
    mod ch05 {}
    #[doc = include_str!("../../../book/src/fitting.md")]
    mod ch06 {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod ch07 {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod ch08 {}
}
