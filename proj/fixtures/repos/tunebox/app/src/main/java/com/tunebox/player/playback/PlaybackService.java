package com.tunebox.player.playback;

import android.app.Service;
import android.content.Intent;
import android.media.AudioManager;
import android.media.MediaPlayer;
import android.os.IBinder;

import com.tunebox.player.library.Song;

/** Keeps the media player alive while the activity is in the background. */
public class PlaybackService extends Service implements MediaPlayer.OnCompletionListener {
    private MediaPlayer mediaPlayer;
    private PlaylistManager playlistManager;
    private AudioManager audioManager;
    private boolean shuffleEnabled;

    @Override
    public void onCreate() {
        super.onCreate();
        mediaPlayer = new MediaPlayer();
        mediaPlayer.setOnCompletionListener(this);
        audioManager = (AudioManager) getSystemService(AUDIO_SERVICE);
        playlistManager = new PlaylistManager();
    }

    public void playSong(Song song) {
        mediaPlayer.reset();
        try {
            mediaPlayer.setDataSource(song.getPath());
            mediaPlayer.prepare();
            mediaPlayer.start();
        } catch (Exception e) {
            skipToNext();
        }
    }

    public void pause() {
        if (mediaPlayer.isPlaying()) mediaPlayer.pause();
    }

    public void seekTo(int positionMs) {
        mediaPlayer.seekTo(positionMs);
    }

    public void skipToNext() {
        Song next = shuffleEnabled ? playlistManager.randomSong() : playlistManager.nextSong();
        if (next != null) playSong(next);
    }

    public void setShuffleEnabled(boolean enabled) {
        shuffleEnabled = enabled;
    }

    @Override
    public void onCompletion(MediaPlayer player) {
        skipToNext();
    }

    @Override
    public IBinder onBind(Intent intent) {
        return null;
    }

    @Override
    public void onDestroy() {
        mediaPlayer.release();
        super.onDestroy();
    }
}
