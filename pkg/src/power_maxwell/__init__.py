"""Power Maxwell distribution toolkit: distribution functions, estimation, simulation and model selection."""
