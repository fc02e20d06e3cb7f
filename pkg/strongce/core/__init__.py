"""Graph and coloring data model"""
