"""Doppler-resilient complementary sequence sets from quasi-Florentine
rectangles and Butson-type Hadamard matrices, with an aperiodic
ambiguity-function engine and the matching family of lower bounds."""

__version__ = "0.1.0"
