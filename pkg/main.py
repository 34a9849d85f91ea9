from dotenv import load_dotenv

from src.cli import app

if __name__ == "__main__":
    load_dotenv()
    app()
