package io.swiftbrowse.data;

import android.content.ContentValues;
import android.database.Cursor;
import android.database.sqlite.SQLiteDatabase;

import java.util.ArrayList;
import java.util.List;

public class BookmarkStore {
    private final SQLiteDatabase db;

    public BookmarkStore(SQLiteDatabase db) {
        this.db = db;
        db.execSQL("CREATE TABLE IF NOT EXISTS bookmarks (url TEXT PRIMARY KEY, title TEXT, created INTEGER)");
    }

    public void addBookmark(String url, String title) {
        ContentValues values = new ContentValues();
        values.put("url", url);
        values.put("title", title);
        values.put("created", System.currentTimeMillis());
        db.insertWithOnConflict("bookmarks", null, values, SQLiteDatabase.CONFLICT_REPLACE);
    }

    public void removeBookmark(String url) {
        db.delete("bookmarks", "url = ?", new String[] {url});
    }

    public List<String> searchBookmarks(String query) {
        List<String> urls = new ArrayList<>();
        Cursor c = db.query("bookmarks", new String[] {"url"}, "title LIKE ? OR url LIKE ?",
                new String[] {"%" + query + "%", "%" + query + "%"}, null, null, "created DESC");
        while (c.moveToNext()) urls.add(c.getString(0));
        c.close();
        return urls;
    }
}
