"""Interlacement over GF(2): genus from rank, and parity certificates."""
import numpy as np

from unicellular import interlacement, parity_certificate, parse_word
from unicellular.errors import OddPartition

for text in ("1 2 -1 -2", "1 2 3 -1 -2 -3", "1 2 -1 -2 3 4 -3 -4", "1 2 3 4 -2 -1 -4 -3"):
    m = parse_word(text)
    A = interlacement(m)
    print(text, "rank", A.rank, "genus", m.genus)
    print(A.to_array())
    try:
        cert = parity_certificate(m)
    except OddPartition as exc:
        print("   no certificate:", exc)
        continue
    u = np.array(cert.vector(m.n_edges))
    print("   basis", cert.basis_edges, "u", u, "A u =", A.to_array() @ u % 2)
