"""Reference tabulated values for the SNR grid 1..12 (linear scale).

These are the published reference numbers the acceptance suite checks
against. Notes on the source tabulation, established independently with
a 30-digit oracle before this package was built:

- its grid column is conventionally labeled in dB but the rows were
  computed at LINEAR SNR 1..12 (all rows match the formulas to printed
  precision under that reading, none do under a dB reading);
- row 2 of TABLE1's second column carries an exponent typo (7.324e-1);
  the corrected magnitude 7.324e-2 is asserted instead;
- printed digits appear to be truncated rather than rounded.
"""

# gamma -> (exact, mean_l1_u1, mean_l2_u2, mean_l2_u3)
TABLE1 = {
    1: (1.639e-1, 1.739e-1, 1.731e-1, 1.556e-1),
    2: (7.161e-2, 7.324e-2, 7.322e-2, 7.007e-2),
    3: (3.422e-2, 3.458e-2, 3.458e-2, 3.416e-2),
    4: (1.701e-2, 1.711e-2, 1.711e-2, 1.706e-2),
    5: (8.648e-3, 8.683e-3, 8.683e-3, 8.677e-3),
    6: (4.461e-3, 4.474e-3, 4.4745e-3, 4.473e-3),
    7: (2.325e-3, 2.330e-3, 2.3308e-3, 2.33072e-3),
    8: (1.221e-3, 1.224e-3, 1.22405e-3, 1.22404e-3),
    9: (6.459e-4, 6.468e-4, 6.46883e-4, 6.46881e-4),
    10: (3.431e-4, 3.435e-4, 3.43588e-4, 3.43588e-4),
    11: (1.830e-4, 1.832e-4, 1.83249e-4, 1.83249e-4),
    12: (9.798e-5, 9.807e-5, 9.80723e-5, 9.80723e-5),
}

# gamma -> (ber4, ber5, ber6, ber7)
TABLE2 = {
    1: (1.484e-1, 1.677e-1, 1.6383e-1, 1.645e-1),
    2: (6.908e-2, 7.179e-2, 7.162e-2, 7.133e-2),
    3: (3.348e-2, 3.423e-2, 3.4226e-2, 3.4233e-2),
    4: (1.677e-2, 1.7014e-2, 1.7017e-2, 1.7036e-2),
    5: (8.5931e-3, 8.6500e-3, 8.6500e-3, 8.6593e-3),
    6: (4.4788e-3, 4.4624e-3, 4.4616e-3, 4.4651e-3),
    7: (2.3741e-3, 2.3262e-3, 2.3257e-3, 2.3267e-3),
    8: (1.2841e-3, 1.2222e-3, 1.2219e-3, 1.2218e-3),
    9: (7.1447e-4, 6.4613e-4, 6.4597e-4, 6.4594e-4),
    10: (4.1463e-4, 3.4326e-4, 3.4318e-4, 3.4317e-4),
    11: (2.5591e-4, 1.8311e-4, 1.8307e-4, 1.8306e-4),
    12: (1.7151e-4, 9.8011e-5, 9.7990e-5, 9.7989e-5),
}

# gamma -> (eps5, eps6, eps7)
TABLE3 = {
    1: (2.31e-2, -4.51e-4, 3.86e-3),
    2: (2.52e-3, 1.96e-4, -3.79e-3),
    3: (1.17e-4, -1.36e-5, 1.94e-4),
    4: (9.01e-5, 2.66e-4, 1.38e-3),
    5: (1.96e-4, 1.93e-4, 1.26e-3),
    6: (2.52e-4, 8.90e-5, 8.65e-4),
    7: (2.72e-4, 4.55e-5, 5.04e-4),
    8: (2.72e-4, 2.54e-5, -6.42e-5),
    9: (2.62e-4, 1.53e-5, -3.32e-5),
    10: (2.48e-4, 1.00e-5, -1.66e-5),
    11: (2.32e-4, 7.13e-6, -6.71e-6),
    12: (2.17e-4, 5.44e-6, -3.87e-7),
}

REFERENCE_RHO0_DIGITS = "1.54512596391949"
REFERENCE_LAMBDA0_DIGITS = "3.03442206626763"
