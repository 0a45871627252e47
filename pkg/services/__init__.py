"""Вычислительный слой: группы, коды фронтов, ходы, инварианты."""
