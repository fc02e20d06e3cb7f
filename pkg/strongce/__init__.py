"""strongce: strong list edge-coloring of graphs with maximum degree 4"""
