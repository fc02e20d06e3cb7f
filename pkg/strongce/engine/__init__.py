"""Structure handlers and the top-level colorer"""
