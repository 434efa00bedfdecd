# Tests package for entgeo.
