"""
Library code: metrics, rank sampling, expectations and the evaluation harness.
"""
