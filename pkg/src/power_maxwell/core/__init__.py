"""Module initialization: Initializes logger configuration"""
