pub mod dress;
pub mod hildebrand;
pub mod selftest;
pub mod verify;
