def mono(inst, *labels):
    """Monomial in the Pfaffian ring from diagonal labels like 13, 24."""
    return inst.ring.monomial({(lab // 10, lab % 10): 1 for lab in labels})
