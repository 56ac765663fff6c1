"""twistmat - exact computations in soluble matrix groups S_n^I(R) and twisted conjugacy."""

__version__ = "0.1.0"
