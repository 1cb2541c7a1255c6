# case: SR-9
# expect: reject
# cite: S_E = {4} is not a subset of S_B = {1, 2}
from sizedla.lattice import make_e, use_as_b

use_as_b(make_e())
