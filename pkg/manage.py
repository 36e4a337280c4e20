from sys import argv, exit

# Утилита командной строки решателя
# Позволяет выполнять команды:
# - python manage.py solve --config run.ini (решение с восстановлением)
# - python manage.py extrapolation-table (длина экстраполяции по N)
# - python manage.py selftest (проверка инвариантов)

def main():
    """Run solver commands."""
    from experiments.cli import main as run
    return run(argv[1:])

if __name__ == '__main__':
    exit(main())
