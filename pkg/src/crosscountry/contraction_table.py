"""Contraction table generated by scripts/generate_table.py; do not edit by hand.

Maps (code_a, code_b) to (result_code, multiplication rule).
"""

TABLE = {
    (-10, -10): (10, 'mults = 1'),
    (-10, -9): (-8, 'mults = |qsl|'),
    (-10, -8): (-9, 'mults = |qtk|'),
    (-10, -7): (10, 'no multiplication (index renaming)'),
    (-10, -6): (-10, 'no multiplication (index renaming)'),
    (-10, -5): (-3, 'mults = |p| * |tk|'),
    (-10, -4): (-2, 'mults = |q| * |sl|'),
    (-10, -3): (-5, 'mults = |p| * |sl|'),
    (-10, -2): (-4, 'mults = |q| * |tk|'),
    (-10, 1): (1, 'mults = |p| * |q| * |sl| * |tk|'),
    (-10, 2): (4, 'mults = |psl| * |q| * |tk|'),
    (-10, 3): (5, 'mults = |p| * |qtk| * |sl|'),
    (-10, 4): (2, 'mults = |ptk| * |q| * |sl|'),
    (-10, 5): (3, 'mults = |p| * |qsl| * |tk|'),
    (-10, 6): (7, 'mults = |psl| * |qtk|'),
    (-10, 7): (6, 'mults = |ptk| * |qsl|'),
    (-10, 8): (9, 'mults = |psl|'),
    (-10, 9): (8, 'mults = |ptk|'),
    (-10, 10): (-10, 'mults = 1'),
    (-9, -10): (8, 'mults = |ptk|'),
    (-9, -9): (6, 'mults = |ptk| * |qsl|'),
    (-9, -8): (-9, 'mults = |qtk|'),
    (-9, -7): (8, 'no multiplication (index renaming)'),
    (-9, -6): (-9, 'no multiplication (index renaming)'),
    (-9, -5): (-3, 'mults = |p| * |tk|'),
    (-9, -4): (2, 'mults = |ptk| * |q| * |sl|'),
    (-9, -3): (5, 'mults = |p| * |qtk| * |sl|'),
    (-9, -2): (-4, 'mults = |q| * |tk|'),
    (-9, 1): (1, 'mults = |p| * |q| * |sl| * |tk|'),
    (-9, 2): (4, 'mults = |psl| * |q| * |tk|'),
    (-9, 3): (5, 'mults = |p| * |qtk| * |sl|'),
    (-9, 4): (2, 'mults = |ptk| * |q| * |sl|'),
    (-9, 5): (3, 'mults = |p| * |qsl| * |tk|'),
    (-9, 6): (7, 'mults = |psl| * |qtk|'),
    (-9, 7): (6, 'mults = |ptk| * |qsl|'),
    (-9, 8): (7, 'mults = |psl| * |qtk|'),
    (-9, 9): (8, 'mults = |ptk|'),
    (-9, 10): (-9, 'mults = |qtk|'),
    (-8, -10): (9, 'mults = |ptl|'),
    (-8, -9): (7, 'mults = |ptl| * |qsk|'),
    (-8, -8): (-8, 'mults = |qtl|'),
    (-8, -7): (9, 'no multiplication (index renaming)'),
    (-8, -6): (-8, 'no multiplication (index renaming)'),
    (-8, -5): (-5, 'mults = |p| * |tl|'),
    (-8, -4): (4, 'mults = |ptl| * |q| * |sk|'),
    (-8, -3): (3, 'mults = |p| * |qtl| * |sk|'),
    (-8, -2): (-2, 'mults = |q| * |tl|'),
    (-8, 1): (1, 'mults = |p| * |q| * |sk| * |tl|'),
    (-8, 2): (2, 'mults = |psk| * |q| * |tl|'),
    (-8, 3): (3, 'mults = |p| * |qtl| * |sk|'),
    (-8, 4): (4, 'mults = |ptl| * |q| * |sk|'),
    (-8, 5): (5, 'mults = |p| * |qsk| * |tl|'),
    (-8, 6): (6, 'mults = |psk| * |qtl|'),
    (-8, 7): (7, 'mults = |ptl| * |qsk|'),
    (-8, 8): (6, 'mults = |psk| * |qtl|'),
    (-8, 9): (9, 'mults = |ptl|'),
    (-8, 10): (-8, 'mults = |qtl|'),
    (-7, -10): (10, 'no multiplication (index renaming)'),
    (-7, -9): (-8, 'no multiplication (index renaming)'),
    (-7, -8): (-9, 'no multiplication (index renaming)'),
    (-7, -7): (-6, 'no multiplication (index renaming)'),
    (-7, -6): (-7, 'no multiplication (index renaming)'),
    (-7, -5): (-3, 'no multiplication (index renaming)'),
    (-7, -4): (-2, 'no multiplication (index renaming)'),
    (-7, -3): (-5, 'no multiplication (index renaming)'),
    (-7, -2): (-4, 'no multiplication (index renaming)'),
    (-7, 1): (1, 'no multiplication (index renaming)'),
    (-7, 2): (4, 'no multiplication (index renaming)'),
    (-7, 3): (5, 'no multiplication (index renaming)'),
    (-7, 4): (2, 'no multiplication (index renaming)'),
    (-7, 5): (3, 'no multiplication (index renaming)'),
    (-7, 6): (7, 'no multiplication (index renaming)'),
    (-7, 7): (6, 'no multiplication (index renaming)'),
    (-7, 8): (9, 'no multiplication (index renaming)'),
    (-7, 9): (8, 'no multiplication (index renaming)'),
    (-7, 10): (-10, 'no multiplication (index renaming)'),
    (-6, -10): (-10, 'no multiplication (index renaming)'),
    (-6, -9): (-9, 'no multiplication (index renaming)'),
    (-6, -8): (-8, 'no multiplication (index renaming)'),
    (-6, -7): (-7, 'no multiplication (index renaming)'),
    (-6, -6): (-6, 'no multiplication (index renaming)'),
    (-6, -5): (-5, 'no multiplication (index renaming)'),
    (-6, -4): (-4, 'no multiplication (index renaming)'),
    (-6, -3): (-3, 'no multiplication (index renaming)'),
    (-6, -2): (-2, 'no multiplication (index renaming)'),
    (-6, 1): (1, 'no multiplication (index renaming)'),
    (-6, 2): (2, 'no multiplication (index renaming)'),
    (-6, 3): (3, 'no multiplication (index renaming)'),
    (-6, 4): (4, 'no multiplication (index renaming)'),
    (-6, 5): (5, 'no multiplication (index renaming)'),
    (-6, 6): (6, 'no multiplication (index renaming)'),
    (-6, 7): (7, 'no multiplication (index renaming)'),
    (-6, 8): (8, 'no multiplication (index renaming)'),
    (-6, 9): (9, 'no multiplication (index renaming)'),
    (-6, 10): (10, 'no multiplication (index renaming)'),
    (-5, -10): (-2, 'mults = |qs| * |l|'),
    (-5, -9): (-2, 'mults = |qs| * |l|'),
    (-5, -8): (5, 'mults = |ps| * |qtk| * |l|'),
    (-5, -7): (-2, 'no multiplication (index renaming)'),
    (-5, -6): (-5, 'no multiplication (index renaming)'),
    (-5, -5): (1, 'mults = |p| * |qs| * |tk| * |l|'),
    (-5, -4): (-2, 'mults = |q| * |s| * |l|'),
    (-5, -3): (-5, 'mults = |p| * |s| * |l|'),
    (-5, -2): (1, 'mults = |ps| * |q| * |tk| * |l|'),
    (-5, 1): (1, 'mults = |p| * |q| * |s| * |tk| * |l|'),
    (-5, 2): (1, 'mults = |ps| * |q| * |tk| * |l|'),
    (-5, 3): (5, 'mults = |p| * |qtk| * |s| * |l|'),
    (-5, 4): (2, 'mults = |ptk| * |q| * |s| * |l|'),
    (-5, 5): (1, 'mults = |p| * |qs| * |tk| * |l|'),
    (-5, 6): (5, 'mults = |ps| * |qtk| * |l|'),
    (-5, 7): (2, 'mults = |ptk| * |qs| * |l|'),
    (-5, 8): (-5, 'mults = |ps| * |l|'),
    (-5, 9): (2, 'mults = |ptk| * |qs| * |l|'),
    (-5, 10): (-5, 'mults = |ps| * |l|'),
    (-4, -10): (-3, 'mults = |pt| * |k|'),
    (-4, -9): (3, 'mults = |pt| * |qsl| * |k|'),
    (-4, -8): (-4, 'mults = |qt| * |k|'),
    (-4, -7): (-3, 'no multiplication (index renaming)'),
    (-4, -6): (-4, 'no multiplication (index renaming)'),
    (-4, -5): (-3, 'mults = |p| * |t| * |k|'),
    (-4, -4): (1, 'mults = |pt| * |q| * |sl| * |k|'),
    (-4, -3): (1, 'mults = |p| * |qt| * |sl| * |k|'),
    (-4, -2): (-4, 'mults = |q| * |t| * |k|'),
    (-4, 1): (1, 'mults = |p| * |q| * |sl| * |t| * |k|'),
    (-4, 2): (4, 'mults = |psl| * |q| * |t| * |k|'),
    (-4, 3): (1, 'mults = |p| * |qt| * |sl| * |k|'),
    (-4, 4): (1, 'mults = |pt| * |q| * |sl| * |k|'),
    (-4, 5): (3, 'mults = |p| * |qsl| * |t| * |k|'),
    (-4, 6): (4, 'mults = |psl| * |qt| * |k|'),
    (-4, 7): (3, 'mults = |pt| * |qsl| * |k|'),
    (-4, 8): (4, 'mults = |psl| * |qt| * |k|'),
    (-4, 9): (-3, 'mults = |pt| * |k|'),
    (-4, 10): (-4, 'mults = |qt| * |k|'),
    (-3, -10): (-4, 'mults = |qs| * |k|'),
    (-3, -9): (-4, 'mults = |qs| * |k|'),
    (-3, -8): (3, 'mults = |ps| * |qtl| * |k|'),
    (-3, -7): (-4, 'no multiplication (index renaming)'),
    (-3, -6): (-3, 'no multiplication (index renaming)'),
    (-3, -5): (1, 'mults = |p| * |qs| * |tl| * |k|'),
    (-3, -4): (-4, 'mults = |q| * |s| * |k|'),
    (-3, -3): (-3, 'mults = |p| * |s| * |k|'),
    (-3, -2): (1, 'mults = |ps| * |q| * |tl| * |k|'),
    (-3, 1): (1, 'mults = |p| * |q| * |s| * |tl| * |k|'),
    (-3, 2): (1, 'mults = |ps| * |q| * |tl| * |k|'),
    (-3, 3): (3, 'mults = |p| * |qtl| * |s| * |k|'),
    (-3, 4): (4, 'mults = |ptl| * |q| * |s| * |k|'),
    (-3, 5): (1, 'mults = |p| * |qs| * |tl| * |k|'),
    (-3, 6): (3, 'mults = |ps| * |qtl| * |k|'),
    (-3, 7): (4, 'mults = |ptl| * |qs| * |k|'),
    (-3, 8): (-3, 'mults = |ps| * |k|'),
    (-3, 9): (4, 'mults = |ptl| * |qs| * |k|'),
    (-3, 10): (-3, 'mults = |ps| * |k|'),
    (-2, -10): (-5, 'mults = |pt| * |l|'),
    (-2, -9): (5, 'mults = |pt| * |qsk| * |l|'),
    (-2, -8): (-2, 'mults = |qt| * |l|'),
    (-2, -7): (-5, 'no multiplication (index renaming)'),
    (-2, -6): (-2, 'no multiplication (index renaming)'),
    (-2, -5): (-5, 'mults = |p| * |t| * |l|'),
    (-2, -4): (1, 'mults = |pt| * |q| * |sk| * |l|'),
    (-2, -3): (1, 'mults = |p| * |qt| * |sk| * |l|'),
    (-2, -2): (-2, 'mults = |q| * |t| * |l|'),
    (-2, 1): (1, 'mults = |p| * |q| * |sk| * |t| * |l|'),
    (-2, 2): (2, 'mults = |psk| * |q| * |t| * |l|'),
    (-2, 3): (1, 'mults = |p| * |qt| * |sk| * |l|'),
    (-2, 4): (1, 'mults = |pt| * |q| * |sk| * |l|'),
    (-2, 5): (5, 'mults = |p| * |qsk| * |t| * |l|'),
    (-2, 6): (2, 'mults = |psk| * |qt| * |l|'),
    (-2, 7): (5, 'mults = |pt| * |qsk| * |l|'),
    (-2, 8): (2, 'mults = |psk| * |qt| * |l|'),
    (-2, 9): (-5, 'mults = |pt| * |l|'),
    (-2, 10): (-2, 'mults = |qt| * |l|'),
    (1, -10): (1, 'mults = |pt| * |qs| * |k| * |l|'),
    (1, -9): (1, 'mults = |pt| * |qs| * |k| * |l|'),
    (1, -8): (1, 'mults = |ps| * |qt| * |k| * |l|'),
    (1, -7): (1, 'no multiplication (index renaming)'),
    (1, -6): (1, 'no multiplication (index renaming)'),
    (1, -5): (1, 'mults = |p| * |qs| * |t| * |k| * |l|'),
    (1, -4): (1, 'mults = |pt| * |q| * |s| * |k| * |l|'),
    (1, -3): (1, 'mults = |p| * |qt| * |s| * |k| * |l|'),
    (1, -2): (1, 'mults = |ps| * |q| * |t| * |k| * |l|'),
    (1, 1): (1, 'mults = |p| * |q| * |s| * |t| * |k| * |l|'),
    (1, 2): (1, 'mults = |ps| * |q| * |t| * |k| * |l|'),
    (1, 3): (1, 'mults = |p| * |qt| * |s| * |k| * |l|'),
    (1, 4): (1, 'mults = |pt| * |q| * |s| * |k| * |l|'),
    (1, 5): (1, 'mults = |p| * |qs| * |t| * |k| * |l|'),
    (1, 6): (1, 'mults = |ps| * |qt| * |k| * |l|'),
    (1, 7): (1, 'mults = |pt| * |qs| * |k| * |l|'),
    (1, 8): (1, 'mults = |ps| * |qt| * |k| * |l|'),
    (1, 9): (1, 'mults = |pt| * |qs| * |k| * |l|'),
    (1, 10): (1, 'mults = |ps| * |qt| * |k| * |l|'),
    (2, -10): (5, 'mults = |pt| * |qsk| * |l|'),
    (2, -9): (5, 'mults = |pt| * |qsk| * |l|'),
    (2, -8): (2, 'mults = |psk| * |qt| * |l|'),
    (2, -7): (5, 'no multiplication (index renaming)'),
    (2, -6): (2, 'no multiplication (index renaming)'),
    (2, -5): (5, 'mults = |p| * |qsk| * |t| * |l|'),
    (2, -4): (1, 'mults = |pt| * |q| * |sk| * |l|'),
    (2, -3): (1, 'mults = |p| * |qt| * |sk| * |l|'),
    (2, -2): (2, 'mults = |psk| * |q| * |t| * |l|'),
    (2, 1): (1, 'mults = |p| * |q| * |sk| * |t| * |l|'),
    (2, 2): (2, 'mults = |psk| * |q| * |t| * |l|'),
    (2, 3): (1, 'mults = |p| * |qt| * |sk| * |l|'),
    (2, 4): (1, 'mults = |pt| * |q| * |sk| * |l|'),
    (2, 5): (5, 'mults = |p| * |qsk| * |t| * |l|'),
    (2, 6): (2, 'mults = |psk| * |qt| * |l|'),
    (2, 7): (5, 'mults = |pt| * |qsk| * |l|'),
    (2, 8): (2, 'mults = |psk| * |qt| * |l|'),
    (2, 9): (5, 'mults = |pt| * |qsk| * |l|'),
    (2, 10): (2, 'mults = |psk| * |qt| * |l|'),
    (3, -10): (4, 'mults = |ptl| * |qs| * |k|'),
    (3, -9): (4, 'mults = |ptl| * |qs| * |k|'),
    (3, -8): (3, 'mults = |ps| * |qtl| * |k|'),
    (3, -7): (4, 'no multiplication (index renaming)'),
    (3, -6): (3, 'no multiplication (index renaming)'),
    (3, -5): (1, 'mults = |p| * |qs| * |tl| * |k|'),
    (3, -4): (4, 'mults = |ptl| * |q| * |s| * |k|'),
    (3, -3): (3, 'mults = |p| * |qtl| * |s| * |k|'),
    (3, -2): (1, 'mults = |ps| * |q| * |tl| * |k|'),
    (3, 1): (1, 'mults = |p| * |q| * |s| * |tl| * |k|'),
    (3, 2): (1, 'mults = |ps| * |q| * |tl| * |k|'),
    (3, 3): (3, 'mults = |p| * |qtl| * |s| * |k|'),
    (3, 4): (4, 'mults = |ptl| * |q| * |s| * |k|'),
    (3, 5): (1, 'mults = |p| * |qs| * |tl| * |k|'),
    (3, 6): (3, 'mults = |ps| * |qtl| * |k|'),
    (3, 7): (4, 'mults = |ptl| * |qs| * |k|'),
    (3, 8): (3, 'mults = |ps| * |qtl| * |k|'),
    (3, 9): (4, 'mults = |ptl| * |qs| * |k|'),
    (3, 10): (3, 'mults = |ps| * |qtl| * |k|'),
    (4, -10): (3, 'mults = |pt| * |qsl| * |k|'),
    (4, -9): (3, 'mults = |pt| * |qsl| * |k|'),
    (4, -8): (4, 'mults = |psl| * |qt| * |k|'),
    (4, -7): (3, 'no multiplication (index renaming)'),
    (4, -6): (4, 'no multiplication (index renaming)'),
    (4, -5): (3, 'mults = |p| * |qsl| * |t| * |k|'),
    (4, -4): (1, 'mults = |pt| * |q| * |sl| * |k|'),
    (4, -3): (1, 'mults = |p| * |qt| * |sl| * |k|'),
    (4, -2): (4, 'mults = |psl| * |q| * |t| * |k|'),
    (4, 1): (1, 'mults = |p| * |q| * |sl| * |t| * |k|'),
    (4, 2): (4, 'mults = |psl| * |q| * |t| * |k|'),
    (4, 3): (1, 'mults = |p| * |qt| * |sl| * |k|'),
    (4, 4): (1, 'mults = |pt| * |q| * |sl| * |k|'),
    (4, 5): (3, 'mults = |p| * |qsl| * |t| * |k|'),
    (4, 6): (4, 'mults = |psl| * |qt| * |k|'),
    (4, 7): (3, 'mults = |pt| * |qsl| * |k|'),
    (4, 8): (4, 'mults = |psl| * |qt| * |k|'),
    (4, 9): (3, 'mults = |pt| * |qsl| * |k|'),
    (4, 10): (4, 'mults = |psl| * |qt| * |k|'),
    (5, -10): (2, 'mults = |ptk| * |qs| * |l|'),
    (5, -9): (2, 'mults = |ptk| * |qs| * |l|'),
    (5, -8): (5, 'mults = |ps| * |qtk| * |l|'),
    (5, -7): (2, 'no multiplication (index renaming)'),
    (5, -6): (5, 'no multiplication (index renaming)'),
    (5, -5): (1, 'mults = |p| * |qs| * |tk| * |l|'),
    (5, -4): (2, 'mults = |ptk| * |q| * |s| * |l|'),
    (5, -3): (5, 'mults = |p| * |qtk| * |s| * |l|'),
    (5, -2): (1, 'mults = |ps| * |q| * |tk| * |l|'),
    (5, 1): (1, 'mults = |p| * |q| * |s| * |tk| * |l|'),
    (5, 2): (1, 'mults = |ps| * |q| * |tk| * |l|'),
    (5, 3): (5, 'mults = |p| * |qtk| * |s| * |l|'),
    (5, 4): (2, 'mults = |ptk| * |q| * |s| * |l|'),
    (5, 5): (1, 'mults = |p| * |qs| * |tk| * |l|'),
    (5, 6): (5, 'mults = |ps| * |qtk| * |l|'),
    (5, 7): (2, 'mults = |ptk| * |qs| * |l|'),
    (5, 8): (5, 'mults = |ps| * |qtk| * |l|'),
    (5, 9): (2, 'mults = |ptk| * |qs| * |l|'),
    (5, 10): (5, 'mults = |ps| * |qtk| * |l|'),
    (6, -10): (7, 'mults = |ptl| * |qsk|'),
    (6, -9): (7, 'mults = |ptl| * |qsk|'),
    (6, -8): (6, 'mults = |psk| * |qtl|'),
    (6, -7): (7, 'no multiplication (index renaming)'),
    (6, -6): (6, 'no multiplication (index renaming)'),
    (6, -5): (5, 'mults = |p| * |qsk| * |tl|'),
    (6, -4): (4, 'mults = |ptl| * |q| * |sk|'),
    (6, -3): (3, 'mults = |p| * |qtl| * |sk|'),
    (6, -2): (2, 'mults = |psk| * |q| * |tl|'),
    (6, 1): (1, 'mults = |p| * |q| * |sk| * |tl|'),
    (6, 2): (2, 'mults = |psk| * |q| * |tl|'),
    (6, 3): (3, 'mults = |p| * |qtl| * |sk|'),
    (6, 4): (4, 'mults = |ptl| * |q| * |sk|'),
    (6, 5): (5, 'mults = |p| * |qsk| * |tl|'),
    (6, 6): (6, 'mults = |psk| * |qtl|'),
    (6, 7): (7, 'mults = |ptl| * |qsk|'),
    (6, 8): (6, 'mults = |psk| * |qtl|'),
    (6, 9): (7, 'mults = |ptl| * |qsk|'),
    (6, 10): (6, 'mults = |psk| * |qtl|'),
    (7, -10): (6, 'mults = |ptk| * |qsl|'),
    (7, -9): (6, 'mults = |ptk| * |qsl|'),
    (7, -8): (7, 'mults = |psl| * |qtk|'),
    (7, -7): (6, 'no multiplication (index renaming)'),
    (7, -6): (7, 'no multiplication (index renaming)'),
    (7, -5): (3, 'mults = |p| * |qsl| * |tk|'),
    (7, -4): (2, 'mults = |ptk| * |q| * |sl|'),
    (7, -3): (5, 'mults = |p| * |qtk| * |sl|'),
    (7, -2): (4, 'mults = |psl| * |q| * |tk|'),
    (7, 1): (1, 'mults = |p| * |q| * |sl| * |tk|'),
    (7, 2): (4, 'mults = |psl| * |q| * |tk|'),
    (7, 3): (5, 'mults = |p| * |qtk| * |sl|'),
    (7, 4): (2, 'mults = |ptk| * |q| * |sl|'),
    (7, 5): (3, 'mults = |p| * |qsl| * |tk|'),
    (7, 6): (7, 'mults = |psl| * |qtk|'),
    (7, 7): (6, 'mults = |ptk| * |qsl|'),
    (7, 8): (7, 'mults = |psl| * |qtk|'),
    (7, 9): (6, 'mults = |ptk| * |qsl|'),
    (7, 10): (7, 'mults = |psl| * |qtk|'),
    (8, -10): (-9, 'mults = |qsk|'),
    (8, -9): (-9, 'mults = |qsk|'),
    (8, -8): (6, 'mults = |psk| * |qtl|'),
    (8, -7): (-9, 'no multiplication (index renaming)'),
    (8, -6): (8, 'no multiplication (index renaming)'),
    (8, -5): (5, 'mults = |p| * |qsk| * |tl|'),
    (8, -4): (-4, 'mults = |q| * |sk|'),
    (8, -3): (-3, 'mults = |p| * |sk|'),
    (8, -2): (2, 'mults = |psk| * |q| * |tl|'),
    (8, 1): (1, 'mults = |p| * |q| * |sk| * |tl|'),
    (8, 2): (2, 'mults = |psk| * |q| * |tl|'),
    (8, 3): (3, 'mults = |p| * |qtl| * |sk|'),
    (8, 4): (4, 'mults = |ptl| * |q| * |sk|'),
    (8, 5): (5, 'mults = |p| * |qsk| * |tl|'),
    (8, 6): (6, 'mults = |psk| * |qtl|'),
    (8, 7): (7, 'mults = |ptl| * |qsk|'),
    (8, 8): (8, 'mults = |psk|'),
    (8, 9): (7, 'mults = |ptl| * |qsk|'),
    (8, 10): (8, 'mults = |psk|'),
    (9, -10): (-8, 'mults = |qsl|'),
    (9, -9): (-8, 'mults = |qsl|'),
    (9, -8): (7, 'mults = |psl| * |qtk|'),
    (9, -7): (-8, 'no multiplication (index renaming)'),
    (9, -6): (9, 'no multiplication (index renaming)'),
    (9, -5): (3, 'mults = |p| * |qsl| * |tk|'),
    (9, -4): (-2, 'mults = |q| * |sl|'),
    (9, -3): (-5, 'mults = |p| * |sl|'),
    (9, -2): (4, 'mults = |psl| * |q| * |tk|'),
    (9, 1): (1, 'mults = |p| * |q| * |sl| * |tk|'),
    (9, 2): (4, 'mults = |psl| * |q| * |tk|'),
    (9, 3): (5, 'mults = |p| * |qtk| * |sl|'),
    (9, 4): (2, 'mults = |ptk| * |q| * |sl|'),
    (9, 5): (3, 'mults = |p| * |qsl| * |tk|'),
    (9, 6): (7, 'mults = |psl| * |qtk|'),
    (9, 7): (6, 'mults = |ptk| * |qsl|'),
    (9, 8): (9, 'mults = |psl|'),
    (9, 9): (6, 'mults = |ptk| * |qsl|'),
    (9, 10): (9, 'mults = |psl|'),
    (10, -10): (-10, 'mults = 1'),
    (10, -9): (-9, 'mults = |qsk|'),
    (10, -8): (-8, 'mults = |qtl|'),
    (10, -7): (-10, 'no multiplication (index renaming)'),
    (10, -6): (10, 'no multiplication (index renaming)'),
    (10, -5): (-5, 'mults = |p| * |tl|'),
    (10, -4): (-4, 'mults = |q| * |sk|'),
    (10, -3): (-3, 'mults = |p| * |sk|'),
    (10, -2): (-2, 'mults = |q| * |tl|'),
    (10, 1): (1, 'mults = |p| * |q| * |sk| * |tl|'),
    (10, 2): (2, 'mults = |psk| * |q| * |tl|'),
    (10, 3): (3, 'mults = |p| * |qtl| * |sk|'),
    (10, 4): (4, 'mults = |ptl| * |q| * |sk|'),
    (10, 5): (5, 'mults = |p| * |qsk| * |tl|'),
    (10, 6): (6, 'mults = |psk| * |qtl|'),
    (10, 7): (7, 'mults = |ptl| * |qsk|'),
    (10, 8): (8, 'mults = |psk|'),
    (10, 9): (9, 'mults = |ptl|'),
    (10, 10): (10, 'mults = 1'),
}
