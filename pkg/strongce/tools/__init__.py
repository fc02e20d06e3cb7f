"""File formats, instance generators and the benchmark harness"""
