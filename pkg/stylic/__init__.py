"""
Stylic: точная арифметика стилического моноида Styl(A), его алгебры,
идемпотентов, колчана Q(A) и матрицы Картана.
"""

__version__ = "1.0.0"
