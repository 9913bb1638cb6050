//! The chapters of the book, compiled and run as doc-tests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/spaces.md")]
pub mod spaces {}

#[doc = include_str!("../../../book/src/actions.md")]
pub mod actions {}

#[doc = include_str!("../../../book/src/crossed-product.md")]
pub mod crossed_product {}

#[doc = include_str!("../../../book/src/paradoxes.md")]
pub mod paradoxes {}

#[doc = include_str!("../../../book/src/graphs.md")]
pub mod graphs {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
