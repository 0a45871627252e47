"""Команды командной строки frontwave."""
