"""
Transdutores de Multiplicação
=============================

Construção e execução de transdutores de multiplicação em base b,
menor laço fechado no estado 0 e conjuntos quociente com dígitos
restritos.
"""

__version__ = "1.0.0"
__author__ = "[Seu Nome]"
