# Graph polytope test suite
