"""Reusable coloring services: ordering, matching, polynomials and exact search"""
