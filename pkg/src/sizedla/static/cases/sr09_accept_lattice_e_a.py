# case: SR-9-twin
# expect: accept
# cite: S_E = {4} is a subset of S_A = {1, 2, 3, 4}
from sizedla.lattice import make_e, make_f, use_as_a, use_list_c

use_as_a(make_e())
assert use_list_c([make_e(), make_f()]) == 2
